// Builds a small graph, raises and lowers a few edge weights and prints the
// tree after each step.

#include <iostream>
#include <variant>
#include <vector>

#include "dynspt/dynspt.hpp"

using namespace dynspt;

int main() {
    // s=1 u=2 v=3 w=4 x=5 y=6 z=7 (printed 1-based)
    std::vector<Arc> arcs{{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 5, 1}, {5, 6, 1},
                          {2, 4, 1}, {0, 4, 5}, {0, 6, 6}, {6, 2, -2}};
    DynamicSpt spt(Graph::build(7, 0, arcs));
    std::cout << "initial tree\n" << write_tree(spt.tree());

    const std::vector<WeightUpdate> updates{{0, 1, 9}, {0, 6, 1}, {1, 2, 0}};
    for (const WeightUpdate& up : updates) {
        UpdateOutcome out = spt.apply(up, /*merge=*/true);
        UpdateStats st = stats_of(out);
        std::cout << "\n(" << up.tail + 1 << "," << up.head + 1 << ") -> " << up.new_weight << ": "
                  << outcome_name(out) << ", " << st.extractions << " extractions, " << st.edge_changes
                  << " edge changes\n"
                  << write_tree(spt.tree());
    }

    // Lowering (v,u) closes the cycle u,v,u with length -1. The update is
    // rejected: the tree is left as it was and the cycle is reported.
    std::vector<Arc> loop{{0, 1, 1}, {1, 2, 1}, {2, 1, 1}};
    DynamicSpt small(Graph::build(3, 0, loop));
    UpdateOutcome out = small.apply({2, 1, -2});
    if (auto* nc = std::get_if<NegativeCycle>(&out)) {
        std::cout << "\nnegative cycle of length " << nc->length << ":";
        for (Vertex v : nc->witness) {
            std::cout << ' ' << v + 1;
        }
        std::cout << '\n';
        return 0;
    }
    return 1;
}
