#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynspt/graph.hpp"
#include "dynspt/types.hpp"

namespace dynspt {

// Shortest-path tree rooted at the graph source: parent pointers plus the
// derived distance, depth and children arrays. Children lists are kept in
// sync on every reparent so subtree walks cost O(output).
class ShortestPathTree {
  public:
    ShortestPathTree() = default;

    // Builds a tree from a parent array (kNoVertex at the source). Distances
    // and depths are derived from the graph weights. Throws InvalidTree if
    // the parents do not form a spanning arborescence over graph edges.
    static ShortestPathTree from_parents(const Graph& graph, std::span<const Vertex> parents) {
        const std::size_t n = graph.vertex_count();
        if (parents.size() != n) {
            throw Error(Errc::invalid_tree, "parent array has wrong size");
        }
        ShortestPathTree t;
        t.source_ = graph.source();
        t.parent_.assign(parents.begin(), parents.end());
        t.parent_weight_.assign(n, 0);
        t.dist_.assign(n, 0);
        t.depth_.assign(n, 0);
        t.children_.assign(n, {});
        t.child_slot_.assign(n, 0);
        if (t.parent_[t.source_] != kNoVertex) {
            throw Error(Errc::invalid_tree, "source has a parent");
        }
        for (Vertex v = 0; v < n; ++v) {
            if (v == t.source_) {
                continue;
            }
            Vertex p = t.parent_[v];
            if (p == kNoVertex || p >= n) {
                throw Error(Errc::invalid_tree, "vertex " + std::to_string(v) + " has no valid parent");
            }
            auto e = graph.find_edge(p, v);
            if (!e) {
                throw Error(Errc::invalid_tree,
                            "parent edge (" + std::to_string(p) + ", " + std::to_string(v) + ") not in graph");
            }
            t.parent_weight_[v] = graph.weight(*e);
            t.link_child(p, v);
        }
        std::size_t reached = 0;
        std::vector<Vertex> stack{t.source_};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            ++reached;
            for (Vertex c : t.children_[u]) {
                t.dist_[c] = add_checked(t.dist_[u], t.parent_weight_[c]);
                t.depth_[c] = t.depth_[u] + 1;
                stack.push_back(c);
            }
        }
        if (reached != n) {
            throw Error(Errc::invalid_tree, "parent pointers contain a cycle");
        }
        return t;
    }

    std::size_t size() const noexcept { return parent_.size(); }
    Vertex source() const noexcept { return source_; }

    std::optional<Vertex> parent(Vertex v) const {
        if (parent_[v] == kNoVertex) {
            return std::nullopt;
        }
        return parent_[v];
    }
    Vertex parent_or_none(Vertex v) const { return parent_[v]; }
    Weight parent_weight(Vertex v) const { return parent_weight_[v]; }
    Weight dist(Vertex v) const { return dist_[v]; }
    std::size_t depth(Vertex v) const { return depth_[v]; }
    std::span<const Vertex> children(Vertex v) const { return children_[v]; }
    std::span<const Vertex> parents() const { return parent_; }
    std::span<const Weight> distances() const { return dist_; }

    bool has_edge(Vertex tail, Vertex head) const { return parent_[head] == tail && tail != kNoVertex; }

    // Preorder walk of the subtree rooted at v (v first).
    template <class F>
    void for_each_in_subtree(Vertex v, F&& visit) const {
        std::vector<Vertex> stack{v};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            visit(u);
            for (Vertex c : children_[u]) {
                stack.push_back(c);
            }
        }
    }

    // Descendants of v, v included.
    std::vector<Vertex> subtree(Vertex v) const {
        std::vector<Vertex> out;
        for_each_in_subtree(v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    // Parent chain from v up to the source, both ends included.
    std::vector<Vertex> ancestors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex u = v; u != kNoVertex; u = parent_[u]) {
            out.push_back(u);
        }
        return out;
    }

    // True if `ancestor` lies on the parent chain of v (v counts).
    bool is_ancestor(Vertex ancestor, Vertex v) const {
        for (Vertex u = v; u != kNoVertex; u = parent_[u]) {
            if (u == ancestor) {
                return true;
            }
        }
        return false;
    }

    // Tree path from `from` down to `to`; `from` must be an ancestor of `to`.
    std::vector<Vertex> path_down(Vertex from, Vertex to) const {
        std::vector<Vertex> out;
        for (Vertex u = to;; u = parent_[u]) {
            if (u == kNoVertex) {
                throw Error(Errc::precondition_violated, std::to_string(from) + " is not an ancestor");
            }
            out.push_back(u);
            if (u == from) {
                break;
            }
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    // Low-level mutators used by the update algorithms. reparent only moves
    // the link; callers keep dist/depth consistent for the moved subtree.
    void reparent(Vertex v, Vertex new_parent, Weight edge_weight) {
        if (parent_[v] != new_parent) {
            unlink_child(v);
            link_child(new_parent, v);
        }
        parent_weight_[v] = edge_weight;
    }
    void set_dist(Vertex v, Weight d) { dist_[v] = d; }
    void set_depth(Vertex v, std::size_t d) { depth_[v] = d; }
    void set_parent_weight(Vertex v, Weight w) { parent_weight_[v] = w; }

    // Recomputes depths below v from depth(v).
    void refresh_depths_below(Vertex v) {
        for_each_in_subtree(v, [&](Vertex u) {
            if (u != v) {
                depth_[u] = depth_[parent_[u]] + 1;
            }
        });
    }

    friend bool operator==(const ShortestPathTree& a, const ShortestPathTree& b) {
        return a.source_ == b.source_ && a.parent_ == b.parent_ && a.dist_ == b.dist_ &&
               a.parent_weight_ == b.parent_weight_ && a.depth_ == b.depth_;
    }

  private:
    void link_child(Vertex p, Vertex v) {
        parent_[v] = p;
        child_slot_[v] = children_[p].size();
        children_[p].push_back(v);
    }

    void unlink_child(Vertex v) {
        Vertex p = parent_[v];
        auto& siblings = children_[p];
        std::size_t slot = child_slot_[v];
        Vertex moved = siblings.back();
        siblings[slot] = moved;
        child_slot_[moved] = slot;
        siblings.pop_back();
        parent_[v] = kNoVertex;
    }

    Vertex source_ = 0;
    std::vector<Vertex> parent_;
    std::vector<Weight> parent_weight_;
    std::vector<Weight> dist_;
    std::vector<std::size_t> depth_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::size_t> child_slot_;
};

// Checks every structural and distance invariant of `tree` against `graph`.
// Returns a description of the first violation, or nullopt. When
// `require_shortest` is set, also checks triangle optimality on every edge.
inline std::optional<std::string> validate_tree(const Graph& graph, const ShortestPathTree& tree,
                                                bool require_shortest = true) {
    const std::size_t n = graph.vertex_count();
    if (tree.size() != n) {
        return "tree size " + std::to_string(tree.size()) + " != vertex count " + std::to_string(n);
    }
    if (tree.source() != graph.source() || tree.parent(graph.source()) || tree.dist(graph.source()) != 0) {
        return "source is not a root at distance 0";
    }
    std::vector<std::size_t> child_count(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (v == graph.source()) {
            continue;
        }
        auto p = tree.parent(v);
        if (!p) {
            return "vertex " + std::to_string(v) + " has no parent";
        }
        auto e = graph.find_edge(*p, v);
        if (!e) {
            return "vertex " + std::to_string(v) + ": parent edge missing from graph";
        }
        if (graph.weight(*e) != tree.parent_weight(v)) {
            return "vertex " + std::to_string(v) + ": stale parent edge weight";
        }
        if (tree.dist(v) != tree.dist(*p) + graph.weight(*e)) {
            return "vertex " + std::to_string(v) + ": dist not tight along parent edge";
        }
        if (tree.depth(v) != tree.depth(*p) + 1) {
            return "vertex " + std::to_string(v) + ": depth inconsistent";
        }
        ++child_count[*p];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (tree.children(v).size() != child_count[v]) {
            return "vertex " + std::to_string(v) + ": children list out of sync";
        }
        for (Vertex c : tree.children(v)) {
            if (tree.parent_or_none(c) != v) {
                return "vertex " + std::to_string(v) + ": children list out of sync";
            }
        }
    }
    // With children mirroring parents, reaching all n vertices from the
    // source means every parent chain ends there.
    std::size_t reached = 0;
    tree.for_each_in_subtree(graph.source(), [&](Vertex) { ++reached; });
    if (reached != n) {
        return "parent pointers contain a cycle";
    }
    if (require_shortest) {
        for (EdgeId e = 0; e < graph.edge_count(); ++e) {
            if (tree.dist(graph.tail(e)) + graph.weight(e) < tree.dist(graph.head(e))) {
                return "edge (" + std::to_string(graph.tail(e)) + ", " + std::to_string(graph.head(e)) +
                       ") violates triangle optimality";
            }
        }
    }
    return std::nullopt;
}

} // namespace dynspt
