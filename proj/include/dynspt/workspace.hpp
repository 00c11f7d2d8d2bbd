#pragma once

// Scratch state reused across update runs. Membership sets are epoch-stamped
// so starting a run costs O(1) instead of O(n).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynspt/candidate_queue.hpp"
#include "dynspt/graph.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"

namespace dynspt {

class StampSet {
  public:
    // Empties the set and makes room for ids below n.
    void reset(std::size_t n) {
        if (stamp_.size() < n) {
            stamp_.resize(n, 0);
        }
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    bool contains(Vertex v) const { return stamp_[v] == epoch_; }
    void insert(Vertex v) { stamp_[v] = epoch_; }

  private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 1;
};

class UpdateWorkspace {
  public:
    struct Saved {
        Vertex vertex;
        Vertex parent;
        Weight parent_weight;
        Weight dist;
        std::size_t depth;
    };

    void prepare(std::size_t n) {
        scope.reset(n);
        settled.reset(n);
        ancestors.reset(n);
        if (settled_delta.size() < n) {
            settled_delta.resize(n, 0);
        }
        queue.reserve_ids(n);
        queue.clear();
        scope_list.clear();
        batch.clear();
        stack.clear();
        log.clear();
        undo.clear();
        restorations.clear();
    }

    StampSet scope;     // incremental: the subtree below y0
    StampSet settled;   // consolidated in some iteration
    StampSet ancestors; // decremental: ancestors of x0 in the input tree
    std::vector<Weight> settled_delta;
    CandidateQueue queue;
    std::vector<Vertex> scope_list;
    std::vector<Vertex> batch; // vertices consolidated in the current iteration
    std::vector<Vertex> stack;
    std::vector<ExtractionRecord> log;
    std::vector<Saved> undo;
    std::vector<std::pair<Vertex, Vertex>> restorations;
};

namespace detail {

inline void save(UpdateWorkspace& ws, const ShortestPathTree& tree, Vertex v) {
    ws.undo.push_back({v, tree.parent_or_none(v), tree.parent_weight(v), tree.dist(v), tree.depth(v)});
}

inline void roll_back(UpdateWorkspace& ws, ShortestPathTree& tree) {
    for (auto it = ws.undo.rbegin(); it != ws.undo.rend(); ++it) {
        if (it->parent != kNoVertex) {
            tree.reparent(it->vertex, it->parent, it->parent_weight);
        }
        tree.set_dist(it->vertex, it->dist);
        tree.set_depth(it->vertex, it->depth);
    }
    ws.undo.clear();
}

// Settles the current subtree of y (already attached to its new parent):
// shifts distances by delta, fixes depths, drops queued entries. The settled
// vertices are left in ws.batch.
inline void consolidate(ShortestPathTree& tree, UpdateWorkspace& ws, Vertex y, Weight delta, bool keep_undo,
                        UpdateStats& stats, UpdateTrace* trace) {
    ws.batch.clear();
    ws.stack.clear();
    ws.stack.push_back(y);
    const std::size_t iteration = stats.extractions;
    while (!ws.stack.empty()) {
        Vertex u = ws.stack.back();
        ws.stack.pop_back();
        if (keep_undo && u != y) {
            save(ws, tree, u);
        }
        if (u != y) {
            tree.set_depth(u, tree.depth(tree.parent_or_none(u)) + 1);
        }
        tree.set_dist(u, add_checked(tree.dist(u), delta));
        ws.settled.insert(u);
        ws.settled_delta[u] = delta;
        if (ws.queue.remove(u)) {
            ++stats.removals;
        }
        ws.batch.push_back(u);
        if (trace) {
            trace->consolidations.push_back({u, iteration, delta});
        }
        for (Vertex c : tree.children(u)) {
            ws.stack.push_back(c);
        }
    }
}

// Moves y back under its original parent p unless that would close a cycle.
// Ancestors of an unsettled vertex are never settled, so the cycle check
// stops at the first unsettled vertex above p.
inline bool restore_parent(const Graph& g, ShortestPathTree& tree, UpdateWorkspace& ws, Vertex y, Vertex p,
                           bool keep_undo) {
    for (Vertex u = p; u != kNoVertex && ws.settled.contains(u); u = tree.parent_or_none(u)) {
        if (u == y) {
            return false;
        }
    }
    EdgeId e = g.edge_or_throw(p, y);
    if (keep_undo) {
        tree.for_each_in_subtree(y, [&](Vertex u) { save(ws, tree, u); });
    }
    tree.reparent(y, p, g.weight(e));
    tree.set_depth(y, tree.depth(p) + 1);
    tree.refresh_depths_below(y);
    if (tree.dist(y) != add_checked(tree.dist(p), g.weight(e))) {
        throw std::logic_error("restored parent edge is not tight");
    }
    return true;
}

} // namespace detail

} // namespace dynspt
