#pragma once

// Shortest-path tree maintenance after one edge weight increase.

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

// Applies the increase to `graph` and repairs `tree` in place. The tree must
// be a shortest-path tree of the graph before the call.
//
// Only the subtree below y0 can change. Its vertices are settled a whole
// branch at a time in order of their distance shift; whatever is never
// reached by a cheaper detour shifts by exactly theta and keeps its parent.
inline UpdateOutcome increase_weight(Graph& graph, ShortestPathTree& tree, const WeightUpdate& update,
                                     const UpdateOptions& options = {}, UpdateWorkspace* workspace = nullptr) {
    const EdgeId e0 = graph.edge_or_throw(update.tail, update.head);
    const Weight old_weight = graph.weight(e0);
    if (update.new_weight <= old_weight) {
        throw Error(Errc::not_an_increase, "new weight " + std::to_string(update.new_weight) +
                                               " <= current " + std::to_string(old_weight));
    }
    if (options.merge && options.zero_cycles != ZeroCycleStatus::absent) {
        throw Error(Errc::merge_unavailable, options.zero_cycles == ZeroCycleStatus::present
                                                 ? "graph has a 0-cycle"
                                                 : "0-cycle status of the graph is unknown");
    }
    const Weight theta = sub_checked(update.new_weight, old_weight);
    const Vertex x0 = update.tail;
    const Vertex y0 = update.head;
    UpdateTrace* trace = options.trace;
    if (trace) {
        trace->clear();
    }

    graph.set_weight(e0, update.new_weight);
    if (!tree.has_edge(x0, y0)) {
        return Unchanged{};
    }

    UpdateWorkspace local;
    UpdateWorkspace& ws = workspace ? *workspace : local;
    ws.prepare(graph.vertex_count());
    UpdateStats stats;

    tree.for_each_in_subtree(y0, [&](Vertex v) {
        ws.scope.insert(v);
        ws.scope_list.push_back(v);
    });
    stats.affected = ws.scope_list.size();

    auto examine = [&](EdgeId e) {
        ++stats.edges_examined;
        if (trace) {
            trace->examined_edges.push_back(e);
        }
    };
    auto offer = [&](Vertex y, Vertex x, EdgeId e, Weight newdist) {
        Weight delta = newdist - tree.dist(y);
        if (ws.queue.enqueue({y, x, delta, newdist, tree.depth(y), e}) != EnqueueResult::ignored) {
            ++stats.enqueues;
        }
    };

    // Edges entering the subtree from outside. e0 itself yields delta =
    // theta under the new weight and is never queued.
    for (Vertex y : ws.scope_list) {
        for (EdgeId e : graph.in_edges(y)) {
            Vertex x = graph.tail(e);
            if (ws.scope.contains(x)) {
                continue;
            }
            examine(e);
            Weight newdist = add_checked(tree.dist(x), graph.weight(e));
            if (newdist - tree.dist(y) < theta) {
                offer(y, x, e, newdist);
            }
        }
    }

    std::optional<MergeState> merge;
    if (options.merge) {
        merge.emplace(x0, y0);
    }
    auto settled_delta = [&](Vertex p) -> std::optional<Weight> {
        if (!ws.scope.contains(p)) {
            return Weight{0};
        }
        if (ws.settled.contains(p)) {
            return ws.settled_delta[p];
        }
        return std::nullopt;
    };
    auto apply_restorations = [&] {
        for (auto [y, p] : ws.restorations) {
            if (tree.parent_or_none(y) != p && detail::restore_parent(graph, tree, ws, y, p, false)) {
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

        tree.reparent(y, q.candidate_parent, graph.weight(q.via));
        tree.set_depth(y, tree.depth(q.candidate_parent) + 1);
        detail::consolidate(tree, ws, y, q.delta, false, stats, trace);

        for (Vertex x : ws.batch) {
            for (EdgeId e : graph.out_edges(x)) {
                Vertex h = graph.head(e);
                if (!ws.scope.contains(h) || ws.settled.contains(h)) {
                    continue;
                }
                examine(e);
                Weight newdist = add_checked(tree.dist(x), graph.weight(e));
                if (newdist < add_checked(tree.dist(h), theta)) {
                    offer(h, x, e, newdist);
                }
            }
        }
    }
    if (merge) {
        merge->finish(settled_delta, ws.restorations);
        apply_restorations();
    }

    // Everything never settled shifts by theta along its old tree path.
    for (Vertex v : ws.scope_list) {
        if (!ws.settled.contains(v)) {
            tree.set_dist(v, add_checked(tree.dist(v), theta));
            if (trace) {
                trace->consolidations.push_back({v, stats.extractions + 1, theta});
            }
        }
    }
    if (!ws.settled.contains(y0)) {
        tree.set_parent_weight(y0, update.new_weight);
    }

    if (merge && options.merge_post_pass) {
        auto final_delta = [&](Vertex p) {
            if (!ws.scope.contains(p)) {
                return Weight{0};
            }
            return ws.settled.contains(p) ? ws.settled_delta[p] : theta;
        };
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
    if (tree.has_edge(x0, y0)) {
        ++stats.edge_changes;
    }
    stats.strongly_affected = stats.extractions;
    if (trace) {
        trace->affected = ws.scope_list;
    }
    return Updated{tree, stats};
}

} // namespace dynspt
