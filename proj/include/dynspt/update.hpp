#pragma once

// Update vocabulary: the single-edge weight change, the three-way outcome,
// per-run counters and the optional instrumentation trace.

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"

namespace dynspt {

struct WeightUpdate {
    Vertex tail;
    Vertex head;
    Weight new_weight;

    friend bool operator==(const WeightUpdate&, const WeightUpdate&) = default;
};

enum class ZeroCycleStatus { unknown, absent, present };

struct UpdateStats {
    std::size_t affected = 0;          // n0
    std::size_t strongly_affected = 0; // ns
    std::size_t extractions = 0;
    std::size_t edges_examined = 0;
    std::size_t enqueues = 0;
    std::size_t removals = 0;
    std::size_t merges = 0;
    std::size_t post_pass_merges = 0;  // subset of merges found after the loop
    std::size_t edge_changes = 0;
    bool merge_disabled = false;       // merge requested but a 0-cycle is known

    friend bool operator==(const UpdateStats&, const UpdateStats&) = default;
};

struct Unchanged {};

struct Updated {
    // The caller's tree, modified in place.
    std::reference_wrapper<const ShortestPathTree> tree;
    UpdateStats stats;
};

struct NegativeCycle {
    std::vector<Vertex> witness; // closed walk, front() == back()
    Weight length = 0;           // under the updated weights, always < 0
    UpdateStats stats;
};

using UpdateOutcome = std::variant<Unchanged, Updated, NegativeCycle>;

inline const char* outcome_name(const UpdateOutcome& o) {
    switch (o.index()) {
    case 0: return "unchanged";
    case 1: return "updated";
    default: return "negative_cycle";
    }
}

inline UpdateStats stats_of(const UpdateOutcome& o) {
    if (auto* u = std::get_if<Updated>(&o)) {
        return u->stats;
    }
    if (auto* c = std::get_if<NegativeCycle>(&o)) {
        return c->stats;
    }
    return {};
}

struct ExtractionRecord {
    Vertex vertex;
    Vertex parent;          // candidate parent it was attached to
    Vertex original_parent; // parent in the input tree
    Weight delta;

    friend bool operator==(const ExtractionRecord&, const ExtractionRecord&) = default;
};

struct ConsolidationRecord {
    Vertex vertex;
    std::size_t iteration; // 1-based extraction index; k+1 for the final +theta class
    Weight delta;
};

// Everything an invariant suite needs to audit one run. Recording is off
// unless a trace is passed in UpdateOptions.
struct UpdateTrace {
    std::vector<ExtractionRecord> extractions;
    std::vector<EdgeId> examined_edges;
    std::vector<ConsolidationRecord> consolidations;
    std::vector<Vertex> affected;
    std::vector<std::pair<Vertex, Vertex>> restorations; // (vertex, restored parent)

    void clear() {
        extractions.clear();
        examined_edges.clear();
        consolidations.clear();
        affected.clear();
        restorations.clear();
    }
};

struct UpdateOptions {
    bool merge = false;
    // After the loop, re-check every extracted vertex for a restorable
    // original parent. The in-loop hook normally leaves nothing to do.
    bool merge_post_pass = true;
    // 0-cycle status of the graph before the update; merging needs `absent`.
    ZeroCycleStatus zero_cycles = ZeroCycleStatus::unknown;
    UpdateTrace* trace = nullptr;
};

// Vertices whose parent differs between the trees, plus one when the
// updated edge is a tree edge in both (its weight changed).
inline std::size_t count_edge_changes(const ShortestPathTree& old_tree, const ShortestPathTree& new_tree,
                                      const WeightUpdate& update) {
    std::size_t changes = 0;
    for (Vertex v = 0; v < old_tree.size(); ++v) {
        if (old_tree.parent_or_none(v) != new_tree.parent_or_none(v)) {
            ++changes;
        }
    }
    if (old_tree.has_edge(update.tail, update.head) && new_tree.has_edge(update.tail, update.head)) {
        ++changes;
    }
    return changes;
}

} // namespace dynspt
