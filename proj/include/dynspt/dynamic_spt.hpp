#pragma once

// Owning front end: keeps a graph, its shortest-path tree and the cached
// 0-cycle status in sync across a stream of single-edge updates.

#include <string>
#include <variant>
#include <vector>

#include "dynspt/decremental.hpp"
#include "dynspt/graph.hpp"
#include "dynspt/incremental.hpp"
#include "dynspt/static_sssp.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"
#include "dynspt/workspace.hpp"

namespace dynspt {

class InconsistentGraphError : public Error {
  public:
    explicit InconsistentGraphError(CycleWitness w)
        : Error(Errc::inconsistent_graph, "graph has a negative cycle of length " + std::to_string(w.length)),
          witness_(std::move(w)) {}

    const CycleWitness& witness() const noexcept { return witness_; }

  private:
    CycleWitness witness_;
};

class DynamicSpt {
  public:
    // Builds the initial tree with Bellman-Ford. Throws InconsistentGraphError
    // if the graph already has a negative cycle.
    explicit DynamicSpt(Graph graph) : graph_(std::move(graph)) {
        auto result = bellman_ford(graph_);
        if (auto* w = std::get_if<CycleWitness>(&result)) {
            throw InconsistentGraphError(std::move(*w));
        }
        tree_ = std::move(std::get<ShortestPathTree>(result));
        zero_cycles_ = zero_cycle_status(graph_, tree_.distances());
    }

    const Graph& graph() const noexcept { return graph_; }
    const ShortestPathTree& tree() const noexcept { return tree_; }
    ZeroCycleStatus zero_cycles() const noexcept { return zero_cycles_; }
    bool consistent() const noexcept { return consistent_; }

    // Applies one update. Merging is skipped, and flagged in the stats, while
    // the graph has a 0-cycle. After a NegativeCycle outcome the store is
    // inconsistent and further updates throw InconsistentGraph.
    UpdateOutcome apply(const WeightUpdate& update, bool merge = false, UpdateTrace* trace = nullptr) {
        if (!consistent_) {
            throw Error(Errc::inconsistent_graph, "an earlier update produced a negative cycle");
        }
        const EdgeId e0 = graph_.edge_or_throw(update.tail, update.head);
        const Weight old_weight = graph_.weight(e0);
        if (trace) {
            trace->clear();
        }
        if (update.new_weight == old_weight) {
            return Unchanged{};
        }
        UpdateOptions options;
        options.merge = merge && zero_cycles_ == ZeroCycleStatus::absent;
        options.zero_cycles = zero_cycles_;
        options.trace = trace;
        const bool merge_disabled = merge && !options.merge;

        if (update.new_weight > old_weight) {
            UpdateOutcome out = increase_weight(graph_, tree_, update, options, &workspace_);
            // Increases only lengthen cycles; a known 0-cycle may be gone.
            if (zero_cycles_ == ZeroCycleStatus::present) {
                zero_cycles_ = zero_cycle_status(graph_, tree_.distances());
            }
            return flag(std::move(out), merge_disabled);
        }

        UpdateOutcome out = decrease_weight(graph_, tree_, update, options, &workspace_);
        if (std::holds_alternative<NegativeCycle>(out)) {
            consistent_ = false;
            return out;
        }
        // Any new 0-cycle runs through e0, and every edge on it is tight.
        if (zero_cycles_ == ZeroCycleStatus::absent && closes_tight_cycle(update)) {
            zero_cycles_ = ZeroCycleStatus::present;
        }
        return flag(std::move(out), merge_disabled);
    }

  private:
    static UpdateOutcome flag(UpdateOutcome out, bool merge_disabled) {
        if (auto* u = std::get_if<Updated>(&out)) {
            u->stats.merge_disabled = merge_disabled;
        }
        return out;
    }

    bool closes_tight_cycle(const WeightUpdate& update) {
        if (tree_.dist(update.tail) + update.new_weight != tree_.dist(update.head)) {
            return false;
        }
        const std::size_t n = graph_.vertex_count();
        seen_.reset(n);
        std::vector<Vertex> stack{update.head};
        seen_.insert(update.head);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (u == update.tail) {
                return true;
            }
            for (EdgeId e : graph_.out_edges(u)) {
                Vertex v = graph_.head(e);
                if (!seen_.contains(v) && tree_.dist(u) + graph_.weight(e) == tree_.dist(v)) {
                    seen_.insert(v);
                    stack.push_back(v);
                }
            }
        }
        return false;
    }

    Graph graph_;
    ShortestPathTree tree_;
    UpdateWorkspace workspace_;
    StampSet seen_;
    ZeroCycleStatus zero_cycles_ = ZeroCycleStatus::unknown;
    bool consistent_ = true;
};

} // namespace dynspt
