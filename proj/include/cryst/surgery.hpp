#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cryst/colored_graph.hpp"

namespace cryst {

/// Removes v1 and v2 and, for each color j, joins the color-sigma(j) neighbor
/// of v1 to the color-j neighbor of v2 with a color-j edge; the rest of g1 is
/// recolored accordingly, so any of the (d+1)! sums is reachable through
/// sigma. Vertices of g1 keep their order (minus v1), then g2's (minus v2).
ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2,
                           const std::vector<int>& sigma);

/// Identity-permutation sum.
ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2);

struct SumTerm {
    std::string name;      // catalog entry
    bool reversed = false; // opposite orientation (bipartition classes swapped)
    int count = 1;
};

/// Left-fold of connected sums over catalog graphs. Orientation bookkeeping
/// uses the bipartition: summands of equal orientation join at vertices in
/// opposite designated classes, reversed summands at equal classes. Vertex
/// choice is the smallest vertex in the required class.
ColoredGraph iterated_sum(const std::vector<SumTerm>& terms,
                          const std::function<ColoredGraph(const std::string&)>& catalog);

} // namespace cryst
