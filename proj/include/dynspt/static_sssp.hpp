#pragma once

// From-scratch single-source shortest paths: Bellman-Ford with a negative
// cycle witness, and exact 0-cycle detection via reduced costs.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

struct CycleWitness {
    std::vector<Vertex> cycle; // front() == back()
    Weight length = 0;
};

using SsspResult = std::variant<ShortestPathTree, CycleWitness>;

namespace detail {

// Follows predecessor links from `start`; returns the cycle it runs into,
// in edge direction and closed, or an empty vector if it reaches the root.
inline std::vector<Vertex> pred_cycle_from(std::span<const Vertex> pred, Vertex start, std::vector<std::size_t>& mark,
                                           std::size_t stamp) {
    std::vector<Vertex> walk;
    Vertex u = start;
    while (u != kNoVertex && mark[u] != stamp) {
        mark[u] = stamp;
        walk.push_back(u);
        u = pred[u];
    }
    if (u == kNoVertex) {
        return {};
    }
    auto first = std::find(walk.begin(), walk.end(), u);
    if (first == walk.end()) {
        return {}; // joined a chain explored under the same stamp
    }
    std::vector<Vertex> cycle(first, walk.end());
    std::reverse(cycle.begin(), cycle.end());
    cycle.push_back(cycle.front());
    return cycle;
}

inline std::optional<CycleWitness> negative_pred_cycle(const Graph& g, std::span<const Vertex> pred,
                                                       std::span<const Vertex> hints) {
    std::vector<std::size_t> mark(g.vertex_count(), 0);
    std::size_t stamp = 0;
    auto try_from = [&](Vertex v) -> std::optional<CycleWitness> {
        auto cycle = pred_cycle_from(pred, v, mark, ++stamp);
        if (cycle.empty()) {
            return std::nullopt;
        }
        Weight len = g.path_length(cycle);
        if (len >= 0) {
            return std::nullopt;
        }
        return CycleWitness{std::move(cycle), len};
    };
    for (Vertex v : hints) {
        if (auto w = try_from(v)) {
            return w;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (auto w = try_from(v)) {
            return w;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Pass-structured FIFO Bellman-Ford. Pass k scans exactly the vertices whose
// distance improved in pass k-1; any improvement in pass n proves a negative
// cycle, which is then read off the predecessor graph.
inline SsspResult bellman_ford(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const Vertex s = g.source();
    std::vector<Weight> dist(n, 0);
    std::vector<char> reached(n, 0);
    std::vector<Vertex> pred(n, kNoVertex);
    std::vector<char> queued(n, 0);
    std::vector<Vertex> current{s};
    std::vector<Vertex> next;
    reached[s] = 1;

    std::size_t pass = 0;
    std::size_t extra_passes = 0;
    while (!current.empty()) {
        ++pass;
        next.clear();
        for (Vertex u : current) {
            queued[u] = 0;
        }
        for (Vertex u : current) {
            for (EdgeId e : g.out_edges(u)) {
                Vertex v = g.head(e);
                Weight nd = add_checked(dist[u], g.weight(e));
                if (!reached[v] || nd < dist[v]) {
                    dist[v] = nd;
                    reached[v] = 1;
                    pred[v] = u;
                    if (!queued[v]) {
                        queued[v] = 1;
                        next.push_back(v);
                    }
                }
            }
        }
        if (pass >= n && !next.empty()) {
            if (auto w = detail::negative_pred_cycle(g, pred, next)) {
                return *w;
            }
            if (++extra_passes > 4 * n) {
                throw std::logic_error("bellman_ford: negative cycle detected but no witness found");
            }
        }
        current.swap(next);
    }
    return ShortestPathTree::from_parents(g, pred);
}

// Exact 0-cycle test against feasible potentials `dist` (reduced costs
// dist[u] + w - dist[v] >= 0 on every edge). A 0-cycle exists iff the
// subgraph of zero-reduced-cost edges has a cycle.
inline std::optional<std::vector<Vertex>> detect_zero_cycle(const Graph& g, std::span<const Weight> dist) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> zero(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Weight reduced = add_checked(sub_checked(dist[g.tail(e)], dist[g.head(e)]), g.weight(e));
        if (reduced < 0) {
            throw Error(Errc::precondition_violated, "potentials are not feasible (negative cycle?)");
        }
        if (reduced == 0) {
            zero[g.tail(e)].push_back(g.head(e));
        }
    }

    // Iterative Tarjan SCC over the zero subgraph.
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;
    std::size_t counter = 0;
    std::size_t comp_count = 0;
    std::optional<std::size_t> cyclic_comp;
    for (Vertex root = 0; root < n && !cyclic_comp; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [u, next_child] = call.back();
            if (next_child < zero[u].size()) {
                Vertex w = zero[u][next_child++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            Vertex done = u;
            call.pop_back();
            if (!call.empty()) {
                Vertex parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t members = 0;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                    ++members;
                } while (w != done);
                if (members > 1 && !cyclic_comp) {
                    cyclic_comp = comp_count;
                }
                ++comp_count;
            }
        }
    }
    if (!cyclic_comp) {
        return std::nullopt;
    }

    // Every vertex of a non-trivial SCC has a successor inside it; walk until
    // a vertex repeats.
    Vertex start = 0;
    while (comp[start] != *cyclic_comp) {
        ++start;
    }
    std::vector<std::size_t> pos(n, kUnvisited);
    std::vector<Vertex> walk;
    Vertex u = start;
    while (pos[u] == kUnvisited) {
        pos[u] = walk.size();
        walk.push_back(u);
        for (Vertex w : zero[u]) {
            if (comp[w] == *cyclic_comp) {
                u = w;
                break;
            }
        }
    }
    std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(pos[u]), walk.end());
    cycle.push_back(u);
    return cycle;
}

// Convenience overload: computes potentials with Bellman-Ford first.
inline std::optional<std::vector<Vertex>> detect_zero_cycle(const Graph& g) {
    auto result = bellman_ford(g);
    if (std::holds_alternative<CycleWitness>(result)) {
        throw Error(Errc::precondition_violated, "graph has a negative cycle");
    }
    return detect_zero_cycle(g, std::get<ShortestPathTree>(result).distances());
}

inline ZeroCycleStatus zero_cycle_status(const Graph& g, std::span<const Weight> dist) {
    return detect_zero_cycle(g, dist) ? ZeroCycleStatus::present : ZeroCycleStatus::absent;
}

} // namespace dynspt
