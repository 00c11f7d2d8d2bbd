#pragma once

// Shortest-path tree maintenance after one edge weight decrease, with
// negative cycle detection.

#include <optional>
#include <stdexcept>

#include "dynspt/candidate_queue.hpp"
#include "dynspt/graph.hpp"
#include "dynspt/min_change.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"
#include "dynspt/workspace.hpp"

namespace dynspt {

// Applies the decrease to `graph` and repairs `tree` in place. The tree must
// be a shortest-path tree of the graph before the call.
//
// A negative cycle exists iff some vertex that would improve is an ancestor
// of x0. In that case the returned witness is the tree path from that vertex
// down through e0 to the improving edge, and `tree` is left as it was.
inline UpdateOutcome decrease_weight(Graph& graph, ShortestPathTree& tree, const WeightUpdate& update,
                                     const UpdateOptions& options = {}, UpdateWorkspace* workspace = nullptr) {
    const EdgeId e0 = graph.edge_or_throw(update.tail, update.head);
    const Weight old_weight = graph.weight(e0);
    if (update.new_weight >= old_weight) {
        throw Error(Errc::not_a_decrease, "new weight " + std::to_string(update.new_weight) +
                                              " >= current " + std::to_string(old_weight));
    }
    if (options.merge && options.zero_cycles != ZeroCycleStatus::absent) {
        throw Error(Errc::merge_unavailable, options.zero_cycles == ZeroCycleStatus::present
                                                 ? "graph has a 0-cycle"
                                                 : "0-cycle status of the graph is unknown");
    }
    const Vertex x0 = update.tail;
    const Vertex y0 = update.head;
    UpdateTrace* trace = options.trace;
    if (trace) {
        trace->clear();
    }

    graph.set_weight(e0, update.new_weight);
    const Weight start = add_checked(tree.dist(x0), update.new_weight);
    if (start >= tree.dist(y0)) {
        return Unchanged{};
    }

    UpdateWorkspace local;
    UpdateWorkspace& ws = workspace ? *workspace : local;
    ws.prepare(graph.vertex_count());
    UpdateStats stats;

    for (Vertex u = x0; u != kNoVertex; u = tree.parent_or_none(u)) {
        ws.ancestors.insert(u);
    }
    auto cycle_through = [&](Vertex y, Vertex x) {
        // The path from y down to x0 is untouched until detection, and y0
        // hangs below x0 in the current tree, so one tree path covers the
        // whole cycle.
        NegativeCycle nc;
        nc.witness = tree.path_down(y, x);
        nc.witness.push_back(y);
        nc.length = graph.path_length(nc.witness);
        if (nc.length >= 0) {
            throw std::logic_error("negative cycle witness has length " + std::to_string(nc.length));
        }
        return nc;
    };
    if (ws.ancestors.contains(y0)) {
        NegativeCycle nc = cycle_through(y0, x0);
        nc.stats = stats;
        return nc;
    }

    auto examine = [&](EdgeId e) {
        ++stats.edges_examined;
        if (trace) {
            trace->examined_edges.push_back(e);
        }
    };
    ws.queue.enqueue({y0, x0, start - tree.dist(y0), start, tree.depth(y0), e0});
    ++stats.enqueues;
    ++stats.strongly_affected;

    std::optional<MergeState> merge;
    if (options.merge) {
        merge.emplace(x0, y0);
    }
    auto settled_delta = [&](Vertex p) -> std::optional<Weight> {
        if (ws.settled.contains(p)) {
            return ws.settled_delta[p];
        }
        return std::nullopt;
    };
    auto apply_restorations = [&] {
        for (auto [y, p] : ws.restorations) {
            if (tree.parent_or_none(y) != p && detail::restore_parent(graph, tree, ws, y, p, true)) {
                ++stats.merges;
                if (trace) {
                    trace->restorations.emplace_back(y, p);
                }
            }
        }
        ws.restorations.clear();
    };

    std::optional<Weight> last_delta;
    while (!ws.queue.empty()) {
        QueueEntry q = ws.queue.extract_min();
        ++stats.extractions;
        if (q.vertex != y0) {
            ++stats.strongly_affected;
        }
        if (last_delta && q.delta < *last_delta) {
            throw std::logic_error("extracted deltas are not monotone");
        }
        last_delta = q.delta;
        const Vertex y = q.vertex;
        const Vertex original = tree.parent_or_none(y);
        if (merge) {
            merge->on_extract(y, original, q.delta, settled_delta, ws.restorations);
            apply_restorations();
        }
        ws.log.push_back({y, q.candidate_parent, original, q.delta});
        if (trace) {
            trace->extractions.push_back(ws.log.back());
        }

        detail::save(ws, tree, y);
        tree.reparent(y, q.candidate_parent, graph.weight(q.via));
        tree.set_depth(y, tree.depth(q.candidate_parent) + 1);
        detail::consolidate(tree, ws, y, q.delta, true, stats, trace);
        stats.affected += ws.batch.size();

        for (Vertex x : ws.batch) {
            for (EdgeId e : graph.out_edges(x)) {
                Vertex h = graph.head(e);
                if (ws.settled.contains(h)) {
                    continue;
                }
                examine(e);
                Weight newdist = add_checked(tree.dist(x), graph.weight(e));
                if (newdist >= tree.dist(h)) {
                    continue;
                }
                if (ws.ancestors.contains(h)) {
                    NegativeCycle nc = cycle_through(h, x);
                    detail::roll_back(ws, tree);
                    nc.stats = stats;
                    return nc;
                }
                if (ws.queue.enqueue({h, x, newdist - tree.dist(h), newdist, tree.depth(h), e}) !=
                    EnqueueResult::ignored) {
                    ++stats.enqueues;
                }
            }
        }
    }
    if (merge) {
        merge->finish(settled_delta, ws.restorations);
        apply_restorations();
    }

    if (merge && options.merge_post_pass) {
        auto final_delta = [&](Vertex p) { return ws.settled.contains(p) ? ws.settled_delta[p] : Weight{0}; };
        bool changed = true;
        while (changed) {
            changed = false;
            for (const ExtractionRecord& r : ws.log) {
                Vertex p = r.original_parent;
                if (tree.parent_or_none(r.vertex) == p || (r.vertex == y0 && p == x0)) {
                    continue;
                }
                if (final_delta(p) == r.delta && detail::restore_parent(graph, tree, ws, r.vertex, p, false)) {
                    ++stats.merges;
                    ++stats.post_pass_merges;
                    changed = true;
                    if (trace) {
                        trace->restorations.emplace_back(r.vertex, p);
                    }
                }
            }
        }
    }

    for (const ExtractionRecord& r : ws.log) {
        if (tree.parent_or_none(r.vertex) != r.original_parent) {
            ++stats.edge_changes;
        }
    }
    if (tree.has_edge(x0, y0) && !ws.log.empty() && ws.log.front().original_parent == x0) {
        ++stats.edge_changes;
    }
    if (trace) {
        for (const ConsolidationRecord& c : trace->consolidations) {
            trace->affected.push_back(c.vertex);
        }
    }
    return Updated{tree, stats};
}

} // namespace dynspt
