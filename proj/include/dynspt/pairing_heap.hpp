#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dynspt/types.hpp"

namespace dynspt {

// Addressable min pairing heap over dense integer ids in [0, capacity).
// Nodes live in a flat array indexed by id, so a heap can be reused across
// runs without reallocating: clear() costs O(size), not O(capacity).
//
// push and decrease are O(1); pop and erase are O(log n) amortized.
template <class Key, class Compare = std::less<Key>>
class AddressablePairingHeap {
  public:
    using Id = std::uint32_t;

    explicit AddressablePairingHeap(std::size_t capacity = 0, Compare cmp = Compare())
        : nodes_(capacity), cmp_(std::move(cmp)) {}

    // Grows the id range. Existing entries are kept.
    void reserve_ids(std::size_t capacity) {
        if (capacity > nodes_.size()) {
            nodes_.resize(capacity);
        }
    }

    std::size_t capacity() const noexcept { return nodes_.size(); }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool contains(Id id) const { return id < nodes_.size() && nodes_[id].live; }
    const Key& key(Id id) const { return nodes_[id].key; }

    Id top() const { return root_; }

    void push(Id id, Key key) {
        Node& n = nodes_[id];
        n.key = std::move(key);
        n.child = n.next = n.prev = kNil;
        n.live = true;
        root_ = root_ == kNil ? id : link(root_, id);
        ++size_;
    }

    // `key` must not compare greater than the current key.
    void decrease(Id id, Key key) {
        nodes_[id].key = std::move(key);
        if (id != root_) {
            detach(id);
            root_ = link(root_, id);
        }
    }

    std::pair<Id, Key> pop() {
        Id r = root_;
        root_ = combine_siblings(nodes_[r].child);
        nodes_[r].child = kNil;
        nodes_[r].live = false;
        --size_;
        return {r, std::move(nodes_[r].key)};
    }

    bool erase(Id id) {
        if (!contains(id)) {
            return false;
        }
        if (id == root_) {
            pop();
            return true;
        }
        detach(id);
        Id sub = combine_siblings(nodes_[id].child);
        nodes_[id].child = kNil;
        nodes_[id].live = false;
        --size_;
        if (sub != kNil) {
            root_ = link(root_, sub);
        }
        return true;
    }

    void clear() {
        if (root_ != kNil) {
            std::vector<Id> stack{root_};
            while (!stack.empty()) {
                Id u = stack.back();
                stack.pop_back();
                for (Id c = nodes_[u].child; c != kNil; c = nodes_[c].next) {
                    stack.push_back(c);
                }
                nodes_[u] = Node{};
            }
        }
        root_ = kNil;
        size_ = 0;
    }

  private:
    static constexpr Id kNil = static_cast<Id>(-1);

    struct Node {
        Key key{};
        Id child = kNil;
        Id next = kNil;
        Id prev = kNil; // previous sibling, or the parent for a leftmost child
        bool live = false;
    };

    // Both arguments are roots; the loser becomes the winner's leftmost child.
    Id link(Id a, Id b) {
        if (cmp_(nodes_[b].key, nodes_[a].key)) {
            std::swap(a, b);
        }
        Node& w = nodes_[a];
        Node& l = nodes_[b];
        l.prev = a;
        l.next = w.child;
        if (w.child != kNil) {
            nodes_[w.child].prev = b;
        }
        w.child = b;
        w.next = w.prev = kNil;
        return a;
    }

    void detach(Id id) {
        Node& n = nodes_[id];
        if (nodes_[n.prev].child == id) {
            nodes_[n.prev].child = n.next;
        } else {
            nodes_[n.prev].next = n.next;
        }
        if (n.next != kNil) {
            nodes_[n.next].prev = n.prev;
        }
        n.next = n.prev = kNil;
    }

    // Standard two-pass pairing: link neighbours left to right, then fold
    // the pairs right to left.
    Id combine_siblings(Id first) {
        if (first == kNil) {
            return kNil;
        }
        scratch_.clear();
        for (Id c = first; c != kNil;) {
            Id nx = nodes_[c].next;
            nodes_[c].next = nodes_[c].prev = kNil;
            scratch_.push_back(c);
            c = nx;
        }
        std::size_t pairs = 0;
        for (std::size_t i = 0; i + 1 < scratch_.size(); i += 2) {
            scratch_[pairs++] = link(scratch_[i], scratch_[i + 1]);
        }
        if (scratch_.size() % 2 == 1) {
            scratch_[pairs++] = scratch_.back();
        }
        Id acc = scratch_[pairs - 1];
        for (std::size_t i = pairs - 1; i-- > 0;) {
            acc = link(scratch_[i], acc);
        }
        return acc;
    }

    std::vector<Node> nodes_;
    std::vector<Id> scratch_;
    Id root_ = kNil;
    std::size_t size_ = 0;
    Compare cmp_;
};

} // namespace dynspt
