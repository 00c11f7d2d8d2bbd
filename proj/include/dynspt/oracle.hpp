#pragma once

// Brute-force ground truth for tests and verification: recomputation from
// scratch, enumeration of every shortest-path tree, and the minimum number of
// edge changes any of them needs.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/static_sssp.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

inline constexpr std::uint64_t kDefaultEnumerationCap = 200000;

inline SsspResult recompute(const Graph& graph) { return bellman_ford(graph); }

// Calls visit(parents) for every shortest-path tree of `graph`, where
// `parents` is a parent array with kNoVertex at the source. Throws
// CapExceededError when the product of per-vertex tight-parent counts is
// above `cap`.
template <class Visit>
void for_each_spt(const Graph& graph, std::uint64_t cap, Visit&& visit) {
    auto result = recompute(graph);
    if (std::holds_alternative<CycleWitness>(result)) {
        throw Error(Errc::inconsistent_graph, "graph has a negative cycle");
    }
    const auto& dist = std::get<ShortestPathTree>(result).distances();
    const std::size_t n = graph.vertex_count();
    const Vertex s = graph.source();

    std::vector<std::vector<Vertex>> options(n);
    std::uint64_t product = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == s) {
            continue;
        }
        for (EdgeId e : graph.in_edges(v)) {
            if (dist[graph.tail(e)] + graph.weight(e) == dist[v]) {
                options[v].push_back(graph.tail(e));
            }
        }
        std::uint64_t k = options[v].size();
        product = product > cap / k ? cap + 1 : product * k;
    }
    if (product > cap) {
        // Report the exact product when it fits, otherwise the saturated one.
        std::uint64_t exact = 1;
        for (Vertex v = 0; v < n; ++v) {
            if (v == s) {
                continue;
            }
            std::uint64_t k = options[v].size();
            if (exact > std::numeric_limits<std::uint64_t>::max() / k) {
                exact = std::numeric_limits<std::uint64_t>::max();
                break;
            }
            exact *= k;
        }
        throw CapExceededError(exact, cap);
    }

    std::vector<std::size_t> choice(n, 0);
    std::vector<Vertex> parents(n, kNoVertex);
    std::vector<std::uint8_t> state(n);
    std::vector<Vertex> chain;
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            parents[v] = v == s ? kNoVertex : options[v][choice[v]];
        }
        // 0 = unknown, 1 = on the current chain, 2 = reaches the source.
        std::fill(state.begin(), state.end(), 0);
        state[s] = 2;
        bool acyclic = true;
        for (Vertex v = 0; v < n && acyclic; ++v) {
            chain.clear();
            Vertex u = v;
            while (state[u] == 0) {
                state[u] = 1;
                chain.push_back(u);
                u = parents[u];
            }
            if (state[u] == 1) {
                acyclic = false;
            }
            for (Vertex c : chain) {
                state[c] = 2;
            }
        }
        if (acyclic) {
            visit(static_cast<const std::vector<Vertex>&>(parents));
        }
        Vertex v = 0;
        for (; v < n; ++v) {
            if (v == s) {
                continue;
            }
            if (++choice[v] < options[v].size()) {
                break;
            }
            choice[v] = 0;
        }
        if (v == n) {
            break;
        }
    }
}

inline std::vector<ShortestPathTree> enumerate_spts(const Graph& graph, std::uint64_t cap = kDefaultEnumerationCap) {
    std::vector<ShortestPathTree> out;
    for_each_spt(graph, cap, [&](const std::vector<Vertex>& parents) {
        out.push_back(ShortestPathTree::from_parents(graph, parents));
    });
    return out;
}

// Fewest edge changes from old_tree over all shortest-path trees of
// graph_new, counted as in count_edge_changes.
inline std::size_t min_edge_changes(const Graph& graph_new, const ShortestPathTree& old_tree, const WeightUpdate& e0,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
    const bool e0_in_old = old_tree.has_edge(e0.tail, e0.head);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_spt(graph_new, cap, [&](const std::vector<Vertex>& parents) {
        std::size_t changes = 0;
        for (Vertex v = 0; v < parents.size(); ++v) {
            if (parents[v] != old_tree.parent_or_none(v)) {
                ++changes;
            }
        }
        if (e0_in_old && parents[e0.head] == e0.tail) {
            ++changes;
        }
        best = std::min(best, changes);
    });
    return best;
}

} // namespace dynspt
