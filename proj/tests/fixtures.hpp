#pragma once

#include <utility>
#include <vector>

#include "cryst/colored_graph.hpp"

// Small 8-vertex graphs used across the suites. All are contracted 4- or
// 5-colored graphs on v1..v8 (0-based here) built from one C2 + C6 or C4 + C4
// two-color layout.
namespace fixtures {

using cryst::ColoredGraph;

using Pairs = std::vector<std::pair<int, int>>;

inline std::vector<int> matching(int n, const Pairs& pairs) {
    std::vector<int> m(n, -1);
    for (auto [a, b] : pairs) {
        m[a] = b;
        m[b] = a;
    }
    return m;
}

inline ColoredGraph from_pairs(int dim, int n, const std::vector<Pairs>& colors) {
    std::vector<std::vector<int>> m;
    for (const auto& p : colors) m.push_back(matching(n, p));
    return ColoredGraph(dim, std::move(m));
}

// Colors 0..2 shared by the C2+C6 family below.
inline Pairs c2c6_color0() { return {{0, 1}, {2, 3}, {4, 5}, {6, 7}}; }
inline Pairs c2c6_color1() { return {{0, 1}, {3, 4}, {5, 6}, {7, 2}}; }
inline Pairs j1_color2() { return {{0, 4}, {1, 3}, {2, 5}, {6, 7}}; }

// Three 8-vertex 3-sphere graphs with every pair count 2.
inline ColoredGraph s3_eight_a() { // J1 + third color variant (i), first case
    return from_pairs(3, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 2}, {1, 3}, {5, 6}, {4, 7}}});
}
inline ColoredGraph s3_eight_b() { // variant (i), second case
    return from_pairs(3, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 2}, {1, 7}, {4, 5}, {3, 6}}});
}
inline ColoredGraph s3_eight_c() { // variant (ii)
    return from_pairs(3, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 4}, {1, 7}, {2, 3}, {5, 6}}});
}

// Variant (iii): passes both counting conditions but has fundamental group Z.
inline ColoredGraph s3_criteria_but_z() {
    return from_pairs(3, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 6}, {1, 7}, {3, 4}, {2, 5}}});
}

// C4+C4 layout forced to the graph with fundamental group Z/2.
inline ColoredGraph s3_criteria_but_z2() {
    return from_pairs(3, 8,
                      {{{0, 1}, {2, 3}, {4, 5}, {6, 7}},
                       {{1, 2}, {0, 3}, {5, 6}, {4, 7}},
                       {{0, 4}, {1, 5}, {2, 6}, {3, 7}},
                       {{0, 6}, {1, 7}, {2, 4}, {3, 5}}});
}

// The two valid 5-color completions: both isomorphic to the catalog cp2.
inline ColoredGraph cp2_completion_of_b() { // = catalog cp2 layout
    return from_pairs(4, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 2}, {1, 7}, {4, 5}, {3, 6}},
                             {{0, 4}, {1, 7}, {2, 3}, {5, 6}}});
}
inline ColoredGraph cp2_completion_of_c() {
    return from_pairs(4, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 4}, {1, 7}, {2, 3}, {5, 6}},
                             {{0, 2}, {3, 6}, {4, 5}, {1, 7}}});
}

// Completing s3_eight_b the other way leaves a residue with H1 = Z/2.
inline ColoredGraph bad_completion_of_b() {
    return from_pairs(4, 8, {c2c6_color0(), c2c6_color1(), j1_color2(),
                             {{0, 2}, {1, 7}, {4, 5}, {3, 6}},
                             {{2, 3}, {0, 6}, {1, 5}, {4, 7}}});
}

// Connected 4-vertex 5-colored graph whose residue without color 0 is
// disconnected.
inline ColoredGraph not_contracted_example() {
    return from_pairs(4, 4,
                      {{{0, 2}, {1, 3}},
                       {{0, 1}, {2, 3}},
                       {{0, 1}, {2, 3}},
                       {{0, 1}, {2, 3}},
                       {{0, 1}, {2, 3}}});
}

} // namespace fixtures
