#pragma once

// The run / verify / bench drivers behind the dynspt command line. They read
// and write streams so tests can call them directly.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dynspt/dynspt.hpp"

namespace dynspt::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kNegativeCycle = 2 };

struct RunConfig {
    Vertex source = 0; // 0-based
    bool merge = false;
    bool emit_tree = false;
    bool json = false;
    std::optional<std::string> dot_path;
};

struct VerifyConfig {
    Vertex source = 0;
    bool merge = false;
    std::uint64_t cap = kDefaultEnumerationCap;
    // Deliberately breaks the first checked tree; the run must then fail.
    bool inject_corruption = false;
};

struct GeneratedVerifyConfig {
    std::size_t instances = 1000;
    std::uint64_t seed = 1;
    std::size_t min_n = 5;
    std::size_t max_n = 9;
    bool merge = true;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool inject_corruption = false;
};

struct BenchConfig {
    std::size_t n = 10000;
    std::size_t m = 50000;
    std::size_t updates = 100;
    std::uint64_t seed = 1;
    Weight base_max = 100;
    Weight potential_max = 100;
    bool merge = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double micros_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

inline std::string format_cycle(const std::vector<Vertex>& cycle, const VertexNames& names) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) {
            s += ' ';
        }
        s += names.display(cycle[i]);
    }
    return s;
}

inline nlohmann::json stats_json(const UpdateStats& st) {
    return {{"affected", st.affected},
            {"strongly_affected", st.strongly_affected},
            {"extractions", st.extractions},
            {"edges_examined", st.edges_examined},
            {"enqueues", st.enqueues},
            {"removals", st.removals},
            {"merges", st.merges},
            {"edge_changes", st.edge_changes},
            {"merge_disabled", st.merge_disabled}};
}

inline void write_stats_text(std::ostream& out, const UpdateStats& st) {
    out << " n0=" << st.affected << " ns=" << st.strongly_affected << " examined=" << st.edges_examined
        << " enqueues=" << st.enqueues << " removals=" << st.removals << " merges=" << st.merges
        << " edge_changes=" << st.edge_changes;
    if (st.merge_disabled) {
        out << " merge_disabled";
    }
}

// First disagreement between a tree and the oracle distances, or empty.
inline std::string compare_with_oracle(const Graph& g, const ShortestPathTree& tree, const ShortestPathTree& oracle) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (tree.dist(v) != oracle.dist(v)) {
            return "vertex " + std::to_string(v + 1) + ": dist " + std::to_string(tree.dist(v)) + " != oracle " +
                   std::to_string(oracle.dist(v));
        }
    }
    if (auto bad = validate_tree(g, tree)) {
        return *bad;
    }
    return {};
}

} // namespace detail

inline int cmd_run(std::string_view graph_text, std::string_view updates_text, const RunConfig& cfg,
                   std::ostream& out, std::ostream& err) {
    std::optional<ParsedGraph> parsed;
    std::vector<WeightUpdate> updates;
    try {
        parsed.emplace(parse_graph(graph_text, cfg.source));
        updates = parse_updates(updates_text, &parsed->names, parsed->graph.vertex_count());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    const VertexNames& names = parsed->names;

    std::optional<DynamicSpt> spt;
    try {
        spt.emplace(std::move(parsed->graph));
    } catch (const InconsistentGraphError& e) {
        out << "negative cycle in input graph: " << detail::format_cycle(e.witness().cycle, names)
            << " (length " << e.witness().length << ")\n";
        return kNegativeCycle;
    }
    if (spt->zero_cycles() == ZeroCycleStatus::present && cfg.merge) {
        err << "warning: graph has a 0-cycle; merging disabled\n";
    }

    for (std::size_t i = 0; i < updates.size(); ++i) {
        const WeightUpdate& up = updates[i];
        UpdateOutcome outcome;
        auto t0 = detail::Clock::now();
        try {
            outcome = spt->apply(up, cfg.merge);
        } catch (const Error& e) {
            err << "error: update " << i + 1 << ": " << e.what() << '\n';
            return kFailure;
        }
        double us = detail::micros_since(t0);
        UpdateStats st = stats_of(outcome);
        auto* nc = std::get_if<NegativeCycle>(&outcome);
        if (cfg.json) {
            nlohmann::json rec = {{"update", i + 1},
                                  {"tail", up.tail + 1},
                                  {"head", up.head + 1},
                                  {"weight", up.new_weight},
                                  {"outcome", outcome_name(outcome)},
                                  {"time_us", us}};
            rec.update(detail::stats_json(st));
            if (nc) {
                std::vector<std::uint64_t> ids;
                for (Vertex v : nc->witness) {
                    ids.push_back(static_cast<std::uint64_t>(v) + 1);
                }
                rec["witness"] = ids;
                rec["witness_length"] = nc->length;
            }
            out << rec.dump() << '\n';
        } else {
            out << "update " << i + 1 << ' ' << names.display(up.tail) << ' ' << names.display(up.head) << ' '
                << up.new_weight << ' ' << outcome_name(outcome);
            detail::write_stats_text(out, st);
            out << " us=" << static_cast<std::uint64_t>(us) << '\n';
        }
        if (nc) {
            out << "negative cycle: " << detail::format_cycle(nc->witness, names) << " (length " << nc->length
                << ")\n";
            return kNegativeCycle;
        }
    }
    if (cfg.emit_tree) {
        out << write_tree(spt->tree());
    }
    if (cfg.dot_path) {
        std::ofstream dot(*cfg.dot_path);
        if (!dot) {
            err << "error: cannot write " << *cfg.dot_path << '\n';
            return kFailure;
        }
        dot << write_dot(spt->graph(), spt->tree(), &names);
    }
    return kOk;
}

namespace detail {

struct VerifyCounters {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t minimality_checked = 0;
    std::size_t minimality_skipped = 0;
};

// Applies one update through the facade and checks the result against the
// oracle. Returns false once the store has become inconsistent.
inline bool verify_one(DynamicSpt& spt, const WeightUpdate& up, bool merge, std::uint64_t cap, bool corrupt,
                       const std::string& label, VerifyCounters& c, std::ostream& out) {
    ShortestPathTree old_tree = spt.tree();
    const bool minimality = merge && spt.zero_cycles() == ZeroCycleStatus::absent;
    UpdateOutcome outcome = spt.apply(up, merge);
    ++c.checks;
    auto fail = [&](const std::string& why) {
        ++c.failures;
        out << "FAIL " << label << ": " << why << '\n';
    };
    auto oracle = recompute(spt.graph());
    if (auto* nc = std::get_if<NegativeCycle>(&outcome)) {
        if (!std::holds_alternative<CycleWitness>(oracle)) {
            fail("negative cycle reported but oracle finds none");
        } else if (nc->length >= 0 || spt.graph().path_length(nc->witness) != nc->length) {
            fail("witness does not re-sum to a negative length");
        } else {
            out << "ok " << label << ": negative cycle, length " << nc->length << '\n';
        }
        return false;
    }
    if (auto* w = std::get_if<CycleWitness>(&oracle)) {
        fail("oracle finds a negative cycle of length " + std::to_string(w->length) + ", algorithm did not");
        return false;
    }
    ShortestPathTree candidate = spt.tree();
    if (corrupt) {
        Vertex v = static_cast<Vertex>(candidate.size() - 1);
        if (v == candidate.source()) {
            v = 0;
        }
        candidate.set_dist(v, candidate.dist(v) + 1);
    }
    std::string diff = compare_with_oracle(spt.graph(), candidate, std::get<ShortestPathTree>(oracle));
    if (!diff.empty()) {
        fail(diff);
        return true;
    }
    std::string extra;
    if (minimality) {
        try {
            std::size_t best = min_edge_changes(spt.graph(), old_tree, up, cap);
            std::size_t got = count_edge_changes(old_tree, spt.tree(), up);
            ++c.minimality_checked;
            if (got != best || got != stats_of(outcome).edge_changes) {
                fail("edge changes " + std::to_string(got) + " (reported " +
                     std::to_string(stats_of(outcome).edge_changes) + "), minimum " + std::to_string(best));
                return true;
            }
            extra = ", minimal edge changes " + std::to_string(best);
        } catch (const CapExceededError&) {
            ++c.minimality_skipped;
            extra = ", minimality skipped (too many trees)";
        }
    }
    out << "ok " << label << ": " << outcome_name(outcome) << extra << '\n';
    return true;
}

inline int verify_summary(const VerifyCounters& c, std::ostream& out) {
    out << "verify: " << c.checks << " updates checked, " << c.failures << " failures, " << c.minimality_checked
        << " minimality checks";
    if (c.minimality_skipped) {
        out << " (" << c.minimality_skipped << " skipped)";
    }
    out << '\n';
    return c.failures == 0 ? kOk : kFailure;
}

} // namespace detail

inline int cmd_verify(std::string_view graph_text, std::string_view updates_text, const VerifyConfig& cfg,
                      std::ostream& out, std::ostream& err) {
    std::optional<ParsedGraph> parsed;
    std::vector<WeightUpdate> updates;
    try {
        parsed.emplace(parse_graph(graph_text, cfg.source));
        updates = parse_updates(updates_text, &parsed->names, parsed->graph.vertex_count());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    detail::VerifyCounters counters;
    try {
        DynamicSpt spt(parsed->graph);
        auto initial = recompute(parsed->graph);
        std::string diff =
            detail::compare_with_oracle(spt.graph(), spt.tree(), std::get<ShortestPathTree>(initial));
        if (!diff.empty()) {
            out << "FAIL initial tree: " << diff << '\n';
            ++counters.failures;
        }
        for (std::size_t i = 0; i < updates.size(); ++i) {
            bool corrupt = cfg.inject_corruption && i == 0;
            if (!detail::verify_one(spt, updates[i], cfg.merge, cfg.cap, corrupt, "update " + std::to_string(i + 1),
                                    counters, out)) {
                break;
            }
        }
        if (cfg.inject_corruption && updates.empty()) {
            out << "FAIL no update to corrupt\n";
            ++counters.failures;
        }
    } catch (const InconsistentGraphError& e) {
        out << "input graph has a negative cycle (length " << e.witness().length << ")\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return detail::verify_summary(counters, out);
}

// One fresh instance per seed, one update each, either direction, negative
// cycles allowed.
inline int cmd_verify_generated(const GeneratedVerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    detail::VerifyCounters counters;
    try {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.instances; ++i) {
            std::size_t n = std::uniform_int_distribution<std::size_t>(cfg.min_n, cfg.max_n)(rng);
            std::size_t max_m = std::min<std::size_t>(2 * n, n * (n - 1));
            std::size_t m = std::uniform_int_distribution<std::size_t>(std::min(n, max_m), max_m)(rng);
            std::uint64_t seed = rng();
            GeneratedInstance inst = generate_instance({n, m, seed, 10, 10, true});
            UpdateParams up_params;
            up_params.allow_inconsistency = (i % 4 == 3);
            up_params.max_change = 15;
            WeightUpdate up = generate_update(inst.graph, inst.potentials, seed ^ 0x9e3779b97f4a7c15ULL, up_params);
            DynamicSpt spt(std::move(inst.graph));
            bool corrupt = cfg.inject_corruption && i == 0;
            detail::verify_one(spt, up, cfg.merge, cfg.cap, corrupt, "instance " + std::to_string(i + 1), counters,
                               out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return detail::verify_summary(counters, out);
}

// Sum of in-degrees (increase) or out-degrees (decrease) over the affected
// vertices: the edge budget an update may examine.
inline std::size_t edge_budget(const Graph& g, const std::vector<Vertex>& affected, bool increase) {
    std::size_t m0 = 0;
    for (Vertex v : affected) {
        m0 += increase ? g.in_edges(v).size() : g.out_edges(v).size();
    }
    return m0;
}

inline int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        GeneratedInstance inst = generate_instance({cfg.n, cfg.m, cfg.seed, cfg.base_max, cfg.potential_max, true});
        std::vector<Weight> potentials = inst.potentials;
        DynamicSpt spt(std::move(inst.graph));
        out << "n,m,update,direction,outcome,n0,ns,m0,edges_examined,extractions,enqueues,removals,dynamic_us,"
               "scratch_us\n";
        UpdateTrace trace;
        double dynamic_total = 0;
        double scratch_total = 0;
        std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
        for (std::size_t i = 0; i < cfg.updates; ++i) {
            WeightUpdate up = generate_update(spt.graph(), potentials, rng());
            const bool increase = up.new_weight > spt.graph().weight(spt.graph().edge_or_throw(up.tail, up.head));
            auto t0 = detail::Clock::now();
            UpdateOutcome outcome = spt.apply(up, cfg.merge, &trace);
            double dyn = detail::micros_since(t0);
            auto t1 = detail::Clock::now();
            auto scratch = recompute(spt.graph());
            double stat = detail::micros_since(t1);
            if (!std::holds_alternative<ShortestPathTree>(scratch)) {
                err << "error: generator produced an inconsistent update\n";
                return kFailure;
            }
            dynamic_total += dyn;
            scratch_total += stat;
            UpdateStats st = stats_of(outcome);
            out << cfg.n << ',' << cfg.m << ',' << i + 1 << ',' << (increase ? "increase" : "decrease") << ','
                << outcome_name(outcome) << ',' << st.affected << ',' << st.strongly_affected << ','
                << edge_budget(spt.graph(), trace.affected, increase) << ',' << st.edges_examined << ','
                << st.extractions << ',' << st.enqueues << ',' << st.removals << ','
                << static_cast<std::uint64_t>(dyn) << ',' << static_cast<std::uint64_t>(stat) << '\n';
        }
        err << "total dynamic_us=" << static_cast<std::uint64_t>(dynamic_total)
            << " scratch_us=" << static_cast<std::uint64_t>(scratch_total);
        if (dynamic_total > 0) {
            err << " ratio=" << scratch_total / dynamic_total;
        }
        err << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

} // namespace dynspt::cli
