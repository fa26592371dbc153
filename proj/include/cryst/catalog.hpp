#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryst/colored_graph.hpp"

namespace cryst {

struct CatalogExpectation {
    int n = 0;
    int m = 0;
    int beta2 = 0;
    bool orientable = true;
    bool simple = true;
};

struct CatalogEntry {
    std::string name;
    CatalogExpectation expected;
    std::string note;
    bool needs_data = false;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in crystallizations: s4, cp2, s2xs2, and k3 (the last requires an
/// external file carrying the remaining color data; see k3_validate).
/// Every entry is checked against its expected invariants before returning.
ColoredGraph catalog(const std::string& name,
                     const std::optional<ColoredGraph>& k3_data = std::nullopt);

/// The two published K3 colors: color 0 pairs consecutive vertices, color 1
/// follows the cycle decomposition. 134 vertices.
std::vector<std::vector<int>> k3_colors01();

/// Multiset of cycle lengths of the published two-color residue:
/// 5x2, 7x4, 6x6, 1x8, 2x10, 2x16.
std::vector<int> k3_cycle_profile();

/// Checks a candidate full K3 graph against every published invariant:
/// order, the color-0 convention, the {0,1} cycle profile, all pair counts
/// 23, contractedness, bipartiteness, simplicity, and the residue
/// certificates. Throws ValidationFailed with a diagnostic otherwise.
void k3_validate(const ColoredGraph& g);

} // namespace cryst
