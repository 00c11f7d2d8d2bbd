#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace dynspt;
using namespace fixtures;

namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Tree, RerouteTreeIsValid) {
    Graph g = reroute::graph();
    ShortestPathTree t = reroute::tree(g);
    EXPECT_EQ(validate_tree(g, t), std::nullopt);
    EXPECT_EQ(t.dist(reroute::u), 1);
    EXPECT_EQ(t.dist(reroute::v), 2);
    EXPECT_EQ(t.dist(reroute::x), 3);
    EXPECT_EQ(t.dist(reroute::z), 4);
    EXPECT_FALSE(t.parent(reroute::s));
}

TEST(Tree, Subtree) {
    Graph g = reroute::graph();
    ShortestPathTree t = reroute::tree(g);
    using namespace reroute;
    EXPECT_EQ(as_set(t.subtree(u)), (std::set<Vertex>{u, v, w, x, y, z}));
    EXPECT_EQ(t.subtree(x), std::vector<Vertex>{x});
    EXPECT_EQ(t.subtree(s).size(), 7u);
}

TEST(Tree, Ancestors) {
    Graph g = reroute::graph();
    ShortestPathTree t = reroute::tree(g);
    using namespace reroute;
    EXPECT_EQ(t.ancestors(s), std::vector<Vertex>{s});
    EXPECT_EQ(as_set(t.ancestors(x)), (std::set<Vertex>{x, v, u, s}));
}

TEST(Tree, SubtreeAncestorDuality) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = generate(25, 80, seed, 30, 30, false);
        ShortestPathTree t = oracle_tree(g);
        for (Vertex a = 0; a < g.vertex_count(); ++a) {
            auto below = as_set(t.subtree(a));
            for (Vertex b = 0; b < g.vertex_count(); ++b) {
                auto above = as_set(t.ancestors(b));
                EXPECT_EQ(below.count(b), above.count(a));
            }
        }
    }
}

TEST(Tree, FromParentsRejectsBadTrees) {
    Graph g = reroute::graph();
    using namespace reroute;
    auto code_of = [&](std::vector<Vertex> parents) {
        try {
            ShortestPathTree::from_parents(g, parents);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::syntax_error;
    };
    // (x, s) is not an edge.
    EXPECT_EQ(code_of({x, s, u, u, v, w, y}), Errc::invalid_tree);
    // The alternative tree with v under z is accepted (no error).
    EXPECT_EQ(code_of({kNoVertex, s, z, u, v, w, y}), Errc::syntax_error);
    EXPECT_EQ(code_of({kNoVertex, s, u}), Errc::invalid_tree);
    Graph f = negcycle::graph();
    // u <- v and v <- u form a cycle over real edges.
    std::vector<Vertex> cyc{kNoVertex, negcycle::v, negcycle::u, negcycle::u, negcycle::w, negcycle::y};
    try {
        ShortestPathTree::from_parents(f, cyc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_tree);
    }
}

TEST(Tree, ValidateDetectsBrokenInvariants) {
    Graph g = reroute::graph();
    ShortestPathTree t = reroute::tree(g);
    ShortestPathTree bad = t;
    bad.set_dist(reroute::x, 4);
    EXPECT_TRUE(validate_tree(g, bad).has_value());

    bad = t;
    bad.set_depth(reroute::y, 7);
    EXPECT_TRUE(validate_tree(g, bad).has_value());

    // A valid spanning tree that is not shortest: x under s via weight 5.
    std::vector<Vertex> parents{kNoVertex, reroute::s, reroute::u, reroute::u, reroute::s, reroute::w, reroute::y};
    ShortestPathTree loose = ShortestPathTree::from_parents(g, parents);
    EXPECT_EQ(validate_tree(g, loose, false), std::nullopt);
    EXPECT_TRUE(validate_tree(g, loose, true).has_value());
}

TEST(Tree, ReparentKeepsChildrenInSync) {
    Graph g = reroute::graph();
    ShortestPathTree t = reroute::tree(g);
    using namespace reroute;
    t.reparent(x, s, 5);
    t.set_dist(x, 5);
    t.set_depth(x, 1);
    EXPECT_EQ(validate_tree(g, t, false), std::nullopt);
    EXPECT_TRUE(t.children(v).empty());
    EXPECT_EQ(t.path_down(s, x), (std::vector<Vertex>{s, x}));
    EXPECT_EQ(t.path_down(u, z), (std::vector<Vertex>{u, w, y, z}));
}
