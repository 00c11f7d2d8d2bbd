#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynspt/types.hpp"

namespace dynspt {

struct Arc {
    Vertex tail;
    Vertex head;
    Weight weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed weighted graph with a fixed source. Edges are keyed by their
// endpoint pair; ids are dense and stable for the lifetime of the graph, only
// weights change.
class Graph {
  public:
    Graph() = default;

    // Validates ids, rejects self-loops and parallel arcs, and checks that
    // every vertex is reachable from the source.
    static Graph build(std::size_t vertex_count, Vertex source, std::span<const Arc> arcs) {
        if (vertex_count == 0) {
            throw Error(Errc::id_out_of_range, "graph needs at least one vertex");
        }
        if (vertex_count >= kNoVertex) {
            throw Error(Errc::id_out_of_range, "too many vertices");
        }
        if (source >= vertex_count) {
            throw Error(Errc::id_out_of_range, "source " + std::to_string(source));
        }
        Graph g;
        g.source_ = source;
        g.out_.resize(vertex_count);
        g.in_.resize(vertex_count);
        g.tails_.reserve(arcs.size());
        g.heads_.reserve(arcs.size());
        g.weights_.reserve(arcs.size());
        g.index_.reserve(arcs.size());
        for (const Arc& a : arcs) {
            if (a.tail >= vertex_count || a.head >= vertex_count) {
                throw Error(Errc::id_out_of_range,
                            "arc (" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")");
            }
            if (a.tail == a.head) {
                throw Error(Errc::self_loop, "arc at vertex " + std::to_string(a.tail));
            }
            auto id = static_cast<EdgeId>(g.tails_.size());
            if (!g.index_.emplace(key(a.tail, a.head), id).second) {
                throw Error(Errc::duplicate_edge,
                            "arc (" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")");
            }
            g.tails_.push_back(a.tail);
            g.heads_.push_back(a.head);
            g.weights_.push_back(a.weight);
            g.out_[a.tail].push_back(id);
            g.in_[a.head].push_back(id);
        }
        auto unreachable = g.unreachable_vertices();
        if (!unreachable.empty()) {
            throw UnreachableVertexError(std::move(unreachable));
        }
        return g;
    }

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return tails_.size(); }
    Vertex source() const noexcept { return source_; }

    Vertex tail(EdgeId e) const { return tails_[e]; }
    Vertex head(EdgeId e) const { return heads_[e]; }
    Weight weight(EdgeId e) const { return weights_[e]; }
    Arc arc(EdgeId e) const { return {tails_[e], heads_[e], weights_[e]}; }

    std::span<const EdgeId> out_edges(Vertex v) const { return out_[v]; }
    std::span<const EdgeId> in_edges(Vertex v) const { return in_[v]; }

    std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const {
        auto it = index_.find(key(tail, head));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    EdgeId edge_or_throw(Vertex tail, Vertex head) const {
        auto e = find_edge(tail, head);
        if (!e) {
            throw Error(Errc::no_such_edge, "(" + std::to_string(tail) + ", " + std::to_string(head) + ")");
        }
        return *e;
    }

    // Replaces the weight of (tail, head) and returns the previous one.
    Weight set_weight(Vertex tail, Vertex head, Weight new_weight) {
        EdgeId e = edge_or_throw(tail, head);
        Weight old = weights_[e];
        weights_[e] = new_weight;
        return old;
    }

    void set_weight(EdgeId e, Weight new_weight) { weights_[e] = new_weight; }

    // Sum of weights along a vertex sequence; a single vertex has length 0.
    Weight path_length(std::span<const Vertex> path) const {
        Weight total = 0;
        for (std::size_t i = 1; i < path.size(); ++i) {
            auto e = find_edge(path[i - 1], path[i]);
            if (!e) {
                throw Error(Errc::broken_path, "missing edge (" + std::to_string(path[i - 1]) + ", " +
                                                   std::to_string(path[i]) + ")");
            }
            total = add_checked(total, weights_[*e]);
        }
        return total;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> result;
        result.reserve(edge_count());
        for (EdgeId e = 0; e < edge_count(); ++e) {
            result.push_back(arc(e));
        }
        return result;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.source_ == b.source_ && a.tails_ == b.tails_ && a.heads_ == b.heads_ && a.weights_ == b.weights_ &&
               a.out_.size() == b.out_.size();
    }

    // Same source, vertices and weighted edge set, ignoring edge order.
    bool equivalent(const Graph& other) const {
        if (source_ != other.source_ || vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) {
            return false;
        }
        for (EdgeId e = 0; e < edge_count(); ++e) {
            auto f = other.find_edge(tails_[e], heads_[e]);
            if (!f || other.weight(*f) != weights_[e]) {
                return false;
            }
        }
        return true;
    }

  private:
    static std::uint64_t key(Vertex tail, Vertex head) {
        return (static_cast<std::uint64_t>(tail) << 32) | static_cast<std::uint64_t>(head);
    }

    std::vector<Vertex> unreachable_vertices() const {
        std::vector<char> seen(vertex_count(), 0);
        std::vector<Vertex> stack{source_};
        seen[source_] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (EdgeId e : out_[u]) {
                Vertex v = heads_[e];
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::vector<Vertex> missing;
        for (Vertex v = 0; v < vertex_count(); ++v) {
            if (!seen[v]) {
                missing.push_back(v);
            }
        }
        return missing;
    }

    Vertex source_ = 0;
    std::vector<Vertex> tails_;
    std::vector<Vertex> heads_;
    std::vector<Weight> weights_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

} // namespace dynspt
