#pragma once

// Seeded random instances that are consistent by construction: every weight
// is c(u,v) - phi(u) + phi(v) with c >= 0, so phi certifies that no cycle is
// negative. With c >= 1 no cycle has weight 0 either.

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

struct GeneratorParams {
    std::size_t n = 10;
    std::size_t m = 20;
    std::uint64_t seed = 1;
    Weight base_max = 100;
    Weight potential_max = 100;
    bool strict_positive_base = true;
};

struct GeneratedInstance {
    Graph graph;                 // source is vertex 0
    std::vector<Weight> potentials;
};

inline GeneratedInstance generate_instance(const GeneratorParams& p) {
    const std::size_t n = p.n;
    if (n == 0 || n >= kNoVertex) {
        throw Error(Errc::infeasible_params, "n must be in [1, 2^32 - 1)");
    }
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1);
    if (p.m + 1 < n || p.m > max_edges) {
        throw Error(Errc::infeasible_params, "m must be in [n-1, n(n-1)]");
    }
    const Weight base_min = p.strict_positive_base ? 1 : 0;
    if (p.base_max < base_min || p.potential_max < 0) {
        throw Error(Errc::infeasible_params, "empty weight range");
    }

    std::mt19937_64 rng(p.seed);
    auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(p.m);
    std::unordered_set<std::uint64_t> used;
    auto key = [](Vertex a, Vertex b) { return (static_cast<std::uint64_t>(a) << 32) | b; };

    // Random arborescence from 0 so every vertex is reachable.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::shuffle(order.begin() + 1, order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        Vertex parent = order[uniform(0, i - 1)];
        pairs.emplace_back(parent, order[i]);
        used.insert(key(parent, order[i]));
    }

    const std::size_t extra = p.m - (n - 1);
    const std::uint64_t free_pairs = max_edges - (n - 1);
    if (extra * 2 <= free_pairs) {
        while (pairs.size() < p.m) {
            auto a = static_cast<Vertex>(uniform(0, n - 1));
            auto b = static_cast<Vertex>(uniform(0, n - 1));
            if (a != b && used.insert(key(a, b)).second) {
                pairs.emplace_back(a, b);
            }
        }
    } else {
        std::vector<std::pair<Vertex, Vertex>> rest;
        rest.reserve(free_pairs);
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = 0; b < n; ++b) {
                if (a != b && !used.count(key(a, b))) {
                    rest.emplace_back(a, b);
                }
            }
        }
        std::shuffle(rest.begin(), rest.end(), rng);
        pairs.insert(pairs.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(extra));
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::uniform_int_distribution<Weight> potential(-p.potential_max, p.potential_max);
    std::uniform_int_distribution<Weight> base(base_min, p.base_max);
    GeneratedInstance out;
    out.potentials.resize(n);
    for (Weight& phi : out.potentials) {
        phi = potential(rng);
    }
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        Weight w = add_checked(sub_checked(base(rng), out.potentials[a]), out.potentials[b]);
        arcs.push_back({a, b, w});
    }
    out.graph = Graph::build(n, 0, arcs);
    return out;
}

inline Graph generate(std::size_t n, std::size_t m, std::uint64_t seed, Weight base_max, Weight potential_max,
                      bool strict_positive_base) {
    return generate_instance({n, m, seed, base_max, potential_max, strict_positive_base}).graph;
}

enum class Direction { increase, decrease, either };

struct UpdateParams {
    Direction direction = Direction::either;
    // When off, decreases stop at phi(head) - phi(tail), where the reduced
    // cost of the edge reaches 0, so the potentials stay a valid certificate.
    bool allow_inconsistency = false;
    Weight max_change = 100;
};

// Picks a random edge and a new weight in the requested direction. Throws
// InfeasibleParams if a consistent decrease is requested and no edge has
// positive reduced cost left.
inline WeightUpdate generate_update(const Graph& graph, const std::vector<Weight>& potentials, std::uint64_t seed,
                                   const UpdateParams& params = {}) {
    if (graph.edge_count() == 0) {
        throw Error(Errc::infeasible_params, "graph has no edges");
    }
    if (params.max_change < 1) {
        throw Error(Errc::infeasible_params, "max_change must be positive");
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&](Weight lo, Weight hi) { return std::uniform_int_distribution<Weight>(lo, hi)(rng); };
    bool increase = params.direction == Direction::increase ||
                    (params.direction == Direction::either && uniform(0, 1) == 0);
    auto pick_edge = [&] {
        return static_cast<EdgeId>(std::uniform_int_distribution<std::size_t>(0, graph.edge_count() - 1)(rng));
    };

    if (increase) {
        EdgeId e = pick_edge();
        return {graph.tail(e), graph.head(e), add_checked(graph.weight(e), uniform(1, params.max_change))};
    }
    if (params.allow_inconsistency) {
        EdgeId e = pick_edge();
        return {graph.tail(e), graph.head(e), sub_checked(graph.weight(e), uniform(1, params.max_change))};
    }
    auto room = [&](EdgeId e) {
        Weight floor = potentials[graph.head(e)] - potentials[graph.tail(e)];
        return graph.weight(e) - floor;
    };
    EdgeId e = pick_edge();
    for (int attempt = 0; attempt < 32 && room(e) <= 0; ++attempt) {
        e = pick_edge();
    }
    if (room(e) <= 0) {
        std::vector<EdgeId> candidates;
        for (EdgeId f = 0; f < graph.edge_count(); ++f) {
            if (room(f) > 0) {
                candidates.push_back(f);
            }
        }
        if (candidates.empty()) {
            throw Error(Errc::infeasible_params, "no edge can decrease without breaking consistency");
        }
        e = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    }
    Weight theta = uniform(1, std::min(params.max_change, room(e)));
    return {graph.tail(e), graph.head(e), graph.weight(e) - theta};
}

} // namespace dynspt
