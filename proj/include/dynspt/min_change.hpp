#pragma once

// Minimal edge changes: branch analysis of a new tree against the old one,
// the in-loop merge state used by both update algorithms, and a standalone
// merge that works on any pair of trees.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

struct Branch {
    std::vector<Vertex> members; // sorted
    Vertex miniroot;
    Weight delta; // dist_new - dist_old, shared by every member
};

// Tracks lambda (the delta of the current extraction class) and sigma (the
// miniroots extracted in that class with their original parents). Restoration
// candidates are appended to `out` when a class is flushed.
class MergeState {
  public:
    MergeState(Vertex x0, Vertex y0) : x0_(x0), y0_(y0) {}

    // `delta_of(p)` returns the settled delta of p, or nullopt if p has not
    // settled yet.
    template <class DeltaOf>
    void on_extract(Vertex y, Vertex original_parent, Weight delta, DeltaOf&& delta_of,
                    std::vector<std::pair<Vertex, Vertex>>& out) {
        if (lambda_ && delta > *lambda_) {
            flush(delta_of, out);
        }
        if (!lambda_ || delta > *lambda_) {
            lambda_ = delta;
        }
        sigma_.emplace_back(y, original_parent);
    }

    // Flushes the last class once the queue is empty.
    template <class DeltaOf>
    void finish(DeltaOf&& delta_of, std::vector<std::pair<Vertex, Vertex>>& out) {
        if (lambda_) {
            flush(delta_of, out);
        }
    }

    std::optional<Weight> lambda() const { return lambda_; }
    const std::vector<std::pair<Vertex, Vertex>>& sigma() const { return sigma_; }

  private:
    template <class DeltaOf>
    void flush(DeltaOf& delta_of, std::vector<std::pair<Vertex, Vertex>>& out) {
        for (auto [y, p] : sigma_) {
            // The updated edge itself changed weight and is never tight again.
            if (y == y0_ && p == x0_) {
                continue;
            }
            std::optional<Weight> d = delta_of(p);
            if (d && *d == *lambda_) {
                out.emplace_back(y, p);
            }
        }
        sigma_.clear();
    }

    Vertex x0_;
    Vertex y0_;
    std::optional<Weight> lambda_;
    std::vector<std::pair<Vertex, Vertex>> sigma_;
};

namespace detail {

inline bool is_miniroot(const ShortestPathTree& old_tree, const ShortestPathTree& new_tree, const WeightUpdate& e0,
                        Vertex v) {
    Vertex p = new_tree.parent_or_none(v);
    return p == kNoVertex || p != old_tree.parent_or_none(v) || (p == e0.tail && v == e0.head);
}

} // namespace detail

// Components of new_tree after deleting e0 and every edge absent from
// old_tree, ordered by miniroot id.
inline std::vector<Branch> compute_branches(const ShortestPathTree& old_tree, const ShortestPathTree& new_tree,
                                            const WeightUpdate& e0, const Graph& graph_new) {
    std::vector<Branch> out;
    std::vector<Vertex> stack;
    for (Vertex r = 0; r < graph_new.vertex_count(); ++r) {
        if (!detail::is_miniroot(old_tree, new_tree, e0, r)) {
            continue;
        }
        Branch b{{}, r, new_tree.dist(r) - old_tree.dist(r)};
        stack.assign(1, r);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            b.members.push_back(u);
            for (Vertex c : new_tree.children(u)) {
                if (!detail::is_miniroot(old_tree, new_tree, e0, c)) {
                    stack.push_back(c);
                }
            }
        }
        std::sort(b.members.begin(), b.members.end());
        out.push_back(std::move(b));
    }
    return out;
}

// Restores the old parent of every miniroot whose old parent has the same
// delta, until nothing changes. The result is still a shortest-path tree of
// graph_new; with no 0-cycles it has the fewest possible edge changes.
inline ShortestPathTree merge_linked_branches(const ShortestPathTree& old_tree, const ShortestPathTree& new_tree,
                                              const WeightUpdate& e0, const Graph& graph_new,
                                              ZeroCycleStatus zero_cycles) {
    if (zero_cycles == ZeroCycleStatus::present) {
        throw Error(Errc::zero_cycle_present, "merging needs a graph without 0-cycles");
    }
    if (zero_cycles == ZeroCycleStatus::unknown) {
        throw Error(Errc::precondition_violated, "0-cycle status of the graph is unknown");
    }
    ShortestPathTree t = new_tree;
    auto delta = [&](Vertex v) { return new_tree.dist(v) - old_tree.dist(v); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < graph_new.vertex_count(); ++v) {
            Vertex p = old_tree.parent_or_none(v);
            if (p == kNoVertex || t.parent_or_none(v) == p || (p == e0.tail && v == e0.head)) {
                continue;
            }
            if (delta(v) != delta(p) || t.is_ancestor(v, p)) {
                continue;
            }
            Weight w = graph_new.weight(graph_new.edge_or_throw(p, v));
            t.reparent(v, p, w);
            t.set_depth(v, t.depth(p) + 1);
            t.refresh_depths_below(v);
            changed = true;
        }
    }
    return t;
}

} // namespace dynspt
