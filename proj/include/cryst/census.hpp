#pragma once

#include <vector>

#include "cryst/colored_graph.hpp"
#include "cryst/invariants.hpp"

namespace cryst {

struct CensusOptions {
    bool override_size_guard = false;
    long tietze_budget = kDefaultTietzeBudget;
};

struct Census3Entry {
    ColoredGraph graph;
    SphereCertificate sphere;
    int g01, g02, g03; // complementary counts equal these by construction
};

/// All isomorphism classes of connected contracted 4-colored graphs on n
/// vertices that satisfy both counting conditions for encoding a closed
/// 3-manifold. Color 0 is pinned to the standard matching; the rest is a
/// backtracking search with component-count pruning, deduplicated by
/// canonical code.
std::vector<Census3Entry> census_3manifold(int n, const CensusOptions& opts = {});

struct Census4Result {
    std::vector<ColoredGraph> classes;  // every residue certified Sphere
    std::vector<ColoredGraph> unknown;  // pi1 budget ran out somewhere; never dropped silently
};

/// All isomorphism classes of n-vertex simple crystallizations of simply
/// connected 4-manifolds: bipartite, contracted, every 3-color residue
/// connected, all pair counts (n+4)/6, and every 4-color residue certified a
/// 3-sphere. Searches 4-colored sub-crystallizations first, then extends by
/// a fifth matching.
Census4Result census_simple_4(int n, const CensusOptions& opts = {});

} // namespace cryst
