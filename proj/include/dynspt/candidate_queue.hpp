#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "dynspt/pairing_heap.hpp"
#include "dynspt/types.hpp"

namespace dynspt {

// Priority of a queued vertex: smallest delta first, then the smaller
// candidate distance, then the shallower vertex, then the lower id.
struct TieKey {
    Weight delta;
    Weight candidate_distance;
    std::size_t depth;
    Vertex vertex;

    friend auto operator<=>(const TieKey&, const TieKey&) = default;
};

struct QueueEntry {
    Vertex vertex;
    Vertex candidate_parent;
    Weight delta;
    Weight candidate_distance;
    std::size_t depth;
    EdgeId via = kNoEdge; // edge (candidate_parent, vertex)

    TieKey key() const { return {delta, candidate_distance, depth, vertex}; }
};

enum class EnqueueResult { inserted, replaced, ignored };

// At most one entry per vertex. A new entry for a queued vertex replaces the
// old one only when its priority is strictly smaller.
class CandidateQueue {
  public:
    explicit CandidateQueue(std::size_t vertex_count = 0) : heap_(vertex_count), entries_(vertex_count) {}

    void reserve_ids(std::size_t vertex_count) {
        heap_.reserve_ids(vertex_count);
        if (entries_.size() < vertex_count) {
            entries_.resize(vertex_count);
        }
    }

    bool empty() const noexcept { return heap_.empty(); }
    std::size_t size() const noexcept { return heap_.size(); }
    bool contains(Vertex v) const { return heap_.contains(v); }
    const QueueEntry& entry(Vertex v) const { return entries_[v]; }

    EnqueueResult enqueue(const QueueEntry& e) {
        reserve_ids(static_cast<std::size_t>(e.vertex) + 1);
        if (!heap_.contains(e.vertex)) {
            entries_[e.vertex] = e;
            heap_.push(e.vertex, e.key());
            return EnqueueResult::inserted;
        }
        if (e.key() < heap_.key(e.vertex)) {
            entries_[e.vertex] = e;
            heap_.decrease(e.vertex, e.key());
            return EnqueueResult::replaced;
        }
        return EnqueueResult::ignored;
    }

    const QueueEntry& peek() const {
        if (heap_.empty()) {
            throw Error(Errc::empty_queue, "peek on empty queue");
        }
        return entries_[heap_.top()];
    }

    QueueEntry extract_min() {
        if (heap_.empty()) {
            throw Error(Errc::empty_queue, "extract_min on empty queue");
        }
        return entries_[heap_.pop().first];
    }

    bool remove(Vertex v) { return heap_.erase(v); }

    void clear() { heap_.clear(); }

  private:
    AddressablePairingHeap<TieKey> heap_;
    std::vector<QueueEntry> entries_;
};

} // namespace dynspt
