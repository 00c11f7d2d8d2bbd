#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace dynspt;

int main(int argc, char** argv) {
    CLI::App app{"Maintain a shortest-path tree under single-edge weight updates"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string updates_path;
    std::uint64_t source = 1;

    cli::RunConfig run_cfg;
    std::string dot_path;
    auto* run = app.add_subcommand("run", "Apply an update stream and report per-update statistics");
    run->add_option("graph", graph_path, "Graph file (DIMACS sp format)")->required();
    run->add_option("updates", updates_path, "Update stream file")->required();
    run->add_option("--source", source, "Source vertex, 1-based")->default_val(1);
    run->add_flag("--merge", run_cfg.merge, "Restore original parents to minimise edge changes");
    run->add_flag("--emit-tree", run_cfg.emit_tree, "Print the final tree as 't <v> <parent> <dist>' lines");
    run->add_flag("--json", run_cfg.json, "Emit per-update records as JSON lines");
    run->add_option("--dot", dot_path, "Write the final tree as Graphviz to this file");

    cli::VerifyConfig verify_cfg;
    cli::GeneratedVerifyConfig gen_cfg;
    std::size_t generate_count = 0;
    auto* verify = app.add_subcommand("verify", "Check every update against a from-scratch oracle");
    verify->add_option("graph", graph_path, "Graph file (DIMACS sp format)");
    verify->add_option("updates", updates_path, "Update stream file");
    verify->add_option("--source", source, "Source vertex, 1-based")->default_val(1);
    verify->add_flag("--merge", verify_cfg.merge, "Merge, and check edge changes are minimal");
    verify->add_option("--cap", verify_cfg.cap, "Tree enumeration cap for the minimality check")
        ->default_val(kDefaultEnumerationCap);
    verify->add_option("--generate", generate_count, "Verify this many generated instances instead of files");
    verify->add_option("--seed", gen_cfg.seed, "Seed for --generate")->default_val(1);
    verify->add_option("--min-n", gen_cfg.min_n, "Smallest generated vertex count")->default_val(5);
    verify->add_option("--max-n", gen_cfg.max_n, "Largest generated vertex count")->default_val(9);
    verify->add_flag("--inject-corruption", verify_cfg.inject_corruption)->group("");

    cli::BenchConfig bench_cfg;
    auto* bench = app.add_subcommand("bench", "Time dynamic updates against recomputation, CSV on stdout");
    bench->add_option("--n", bench_cfg.n, "Vertices")->default_val(10000);
    bench->add_option("--m", bench_cfg.m, "Edges")->default_val(50000);
    bench->add_option("--updates", bench_cfg.updates, "Number of random updates")->default_val(100);
    bench->add_option("--seed", bench_cfg.seed, "Generator seed")->default_val(1);
    bench->add_option("--base-max", bench_cfg.base_max, "Largest reduced edge cost")->default_val(100);
    bench->add_option("--potential-max", bench_cfg.potential_max, "Largest absolute potential")->default_val(100);
    bench->add_flag("--merge", bench_cfg.merge, "Enable merging");

    CLI11_PARSE(app, argc, argv);

    if (source == 0) {
        std::cerr << "error: --source is 1-based\n";
        return cli::kFailure;
    }
    try {
        if (*run) {
            run_cfg.source = static_cast<Vertex>(source - 1);
            if (!dot_path.empty()) {
                run_cfg.dot_path = dot_path;
            }
            return cli::cmd_run(cli::read_file(graph_path), cli::read_file(updates_path), run_cfg, std::cout,
                                std::cerr);
        }
        if (*verify) {
            if (generate_count > 0) {
                gen_cfg.instances = generate_count;
                gen_cfg.merge = verify_cfg.merge;
                gen_cfg.cap = verify_cfg.cap;
                gen_cfg.inject_corruption = verify_cfg.inject_corruption;
                return cli::cmd_verify_generated(gen_cfg, std::cout, std::cerr);
            }
            if (graph_path.empty() || updates_path.empty()) {
                std::cerr << "error: verify needs GRAPH and UPDATES, or --generate N\n";
                return cli::kFailure;
            }
            verify_cfg.source = static_cast<Vertex>(source - 1);
            return cli::cmd_verify(cli::read_file(graph_path), cli::read_file(updates_path), verify_cfg, std::cout,
                                   std::cerr);
        }
        return cli::cmd_bench(bench_cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kFailure;
    }
}
