#pragma once

#include <random>
#include <variant>
#include <vector>

#include "dynspt/dynspt.hpp"

namespace fixtures {

using namespace dynspt;

// Seven vertices; raising (s,u) from 1 to 9 reroutes x, z and v.
namespace reroute {
inline constexpr Vertex s = 0, u = 1, v = 2, w = 3, x = 4, y = 5, z = 6;

inline Graph graph() {
    std::vector<Arc> arcs{{s, u, 1}, {u, v, 1}, {u, w, 1}, {w, y, 1}, {y, z, 1},
                          {v, x, 1}, {s, x, 5}, {s, z, 6}, {z, v, -2}};
    return Graph::build(7, s, arcs);
}

inline ShortestPathTree tree(const Graph& g) {
    std::vector<Vertex> parents{kNoVertex, s, u, u, v, w, y};
    return ShortestPathTree::from_parents(g, parents);
}

inline const WeightUpdate increase{s, u, 9};
} // namespace reroute

// The cycle u,w,y,z,v,u has weight 2; lowering (v,u) to -2 makes
// it -1.
namespace negcycle {
inline constexpr Vertex s = 0, u = 1, v = 2, w = 3, y = 4, z = 5;

inline Graph graph() {
    std::vector<Arc> arcs{{s, u, 1}, {u, v, 1}, {u, w, 2}, {w, y, -1}, {y, z, 1}, {z, v, -1}, {v, u, 1}};
    return Graph::build(6, s, arcs);
}

inline ShortestPathTree tree(const Graph& g) {
    std::vector<Vertex> parents{kNoVertex, s, u, u, w, y};
    return ShortestPathTree::from_parents(g, parents);
}

inline const WeightUpdate decrease{v, u, -2};
} // namespace negcycle

// x,w,z,v,x is a 0-cycle.
namespace zerocycle {
inline constexpr Vertex s = 0, x = 1, w = 2, z = 3, v = 4;

inline Graph graph() {
    std::vector<Arc> arcs{{s, x, 1}, {x, w, 1}, {w, z, -1}, {z, v, 1}, {v, x, -1}};
    return Graph::build(5, s, arcs);
}
} // namespace zerocycle

inline ShortestPathTree oracle_tree(const Graph& g) {
    auto r = recompute(g);
    return std::get<ShortestPathTree>(r);
}

inline std::vector<Weight> dists(const ShortestPathTree& t) { return {t.distances().begin(), t.distances().end()}; }

inline bool oracle_has_negative_cycle(const Graph& g) { return std::holds_alternative<CycleWitness>(recompute(g)); }

// A vertex sequence along random out-edges.
inline std::vector<Vertex> random_walk(const Graph& g, Vertex from, std::size_t steps, std::mt19937_64& rng) {
    std::vector<Vertex> path{from};
    for (std::size_t i = 0; i < steps; ++i) {
        auto out = g.out_edges(path.back());
        if (out.empty()) {
            break;
        }
        EdgeId e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
        path.push_back(g.head(e));
    }
    return path;
}

} // namespace fixtures
