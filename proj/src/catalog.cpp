#include "cryst/catalog.hpp"

#include <algorithm>
#include <map>

#include "cryst/invariants.hpp"

namespace cryst {

namespace {

// Pairs are 0-based vertex ids.
using Pairs = std::vector<std::pair<int, int>>;

std::vector<int> matching_from_pairs(int n, const Pairs& pairs) {
    std::vector<int> m(n, -1);
    for (auto [a, b] : pairs) {
        m[a] = b;
        m[b] = a;
    }
    return m;
}

ColoredGraph graph_from_pairs(int dim, int n, const std::vector<Pairs>& colors) {
    std::vector<std::vector<int>> m;
    m.reserve(colors.size());
    for (const auto& p : colors) m.push_back(matching_from_pairs(n, p));
    return ColoredGraph(dim, std::move(m));
}

ColoredGraph make_s4() {
    return graph_from_pairs(4, 2, {{{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}});
}

ColoredGraph make_cp2() {
    return graph_from_pairs(4, 8,
                            {{{0, 1}, {2, 3}, {4, 5}, {6, 7}},
                             {{0, 1}, {3, 4}, {5, 6}, {7, 2}},
                             {{0, 4}, {1, 3}, {2, 5}, {6, 7}},
                             {{0, 2}, {1, 7}, {4, 5}, {3, 6}},
                             {{0, 4}, {1, 7}, {2, 3}, {5, 6}}});
}

ColoredGraph make_s2xs2() {
    return graph_from_pairs(
        4, 14,
        {{{0, 1}, {2, 6}, {3, 8}, {4, 7}, {5, 10}, {9, 11}, {12, 13}},
         {{0, 2}, {1, 5}, {3, 9}, {4, 7}, {6, 10}, {8, 12}, {11, 13}},
         {{0, 1}, {2, 7}, {3, 9}, {4, 8}, {5, 11}, {6, 10}, {12, 13}},
         {{0, 3}, {1, 5}, {2, 6}, {4, 8}, {7, 12}, {9, 11}, {10, 13}},
         {{0, 4}, {1, 6}, {2, 7}, {3, 8}, {5, 11}, {9, 12}, {10, 13}}});
}

const std::vector<std::vector<int>>& k3_cycles() {
    static const std::vector<std::vector<int>> cycles = {
        {6, 7},
        {88, 89},
        {92, 93},
        {118, 119},
        {120, 121},
        {12, 13, 26, 27},
        {18, 19, 70, 71},
        {48, 49, 108, 109},
        {58, 59, 82, 83},
        {66, 67, 102, 103},
        {72, 73, 74, 75},
        {104, 105, 114, 115},
        {0, 1, 20, 21, 14, 15},
        {2, 3, 32, 33, 8, 9},
        {10, 11, 84, 85, 80, 81},
        {38, 39, 76, 77, 40, 41},
        {54, 55, 56, 57, 130, 131},
        {68, 69, 86, 87, 90, 91},
        {62, 63, 112, 113, 124, 125, 64, 65},
        {16, 17, 50, 51, 60, 61, 22, 23, 96, 97},
        {34, 35, 42, 43, 132, 133, 128, 129, 78, 79},
        {4, 5, 52, 53, 106, 107, 94, 95, 36, 37, 126, 127, 44, 45, 46, 47},
        {24, 25, 98, 99, 28, 29, 110, 111, 30, 31, 122, 123, 100, 101, 116, 117},
    };
    return cycles;
}

} // namespace

std::vector<std::vector<int>> k3_colors01() {
    const int n = 134;
    std::vector<int> m0(n), m1(n, -1);
    for (int v = 0; v < n; v += 2) {
        m0[v] = v + 1;
        m0[v + 1] = v;
    }
    // Cycles alternate colors 0 and 1 starting with a color-0 edge; the
    // color-1 edges are (a2,a3), (a4,a5), ..., (a_{2l},a1).
    for (const auto& cyc : k3_cycles()) {
        const int len = static_cast<int>(cyc.size());
        for (int k = 1; k < len; k += 2) {
            int a = cyc[k], b = cyc[(k + 1) % len];
            m1[a] = b;
            m1[b] = a;
        }
    }
    return {m0, m1};
}

std::vector<int> k3_cycle_profile() {
    std::vector<int> out;
    for (const auto& c : k3_cycles()) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

void k3_validate(const ColoredGraph& g) {
    auto check = [](bool ok, const std::string& what) {
        if (!ok) fail(errc::validation_failed, "k3 data: " + what);
    };
    check(g.dim() == 4, "expected a 5-colored graph");
    check(g.order() == 134, "expected 134 vertices");
    for (int v = 0; v < g.order(); v += 2)
        check(g.neighbor(0, v) == v + 1, "color 0 must pair vertex 2i with 2i+1");

    auto comps = residue(g, ColorSet::of({0, 1}));
    std::vector<int> profile;
    for (const auto& c : comps) profile.push_back(static_cast<int>(c.size()));
    std::sort(profile.begin(), profile.end());
    check(profile == k3_cycle_profile(), "cycle structure of the {0,1} residue is wrong");

    for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            check(g_count(g, ColorSet::of({i, j})) == 23,
                  "pair counts must all equal 23");
    check(is_bipartite(g).has_value(), "graph must be bipartite");
    check(is_contracted(g), "graph must be contracted");
    check(simplicity(g, 1), "graph must be simple");
    auto cert = check_4manifold_crystallization(g);
    check(cert.all_residues_pass_criteria(), "a residue fails the counting conditions");
    check(cert.weakest() == SphereStatus::sphere, "a residue could not be certified a 3-sphere");
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"s4", {2, 1, 0, true, true}, "two facets glued along their whole boundary", false},
        {"cp2", {8, 2, 1, true, true}, "eight-vertex crystallization of the projective plane",
         false},
        {"s2xs2", {14, 3, 2, true, true}, "fourteen-vertex crystallization of S2 x S2", false},
        {"k3", {134, 23, 22, true, true},
         "colors 0-1 are built in; colors 2-4 come from an external data file", true},
    };
    return entries;
}

ColoredGraph catalog(const std::string& name, const std::optional<ColoredGraph>& k3_data) {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog_entries())
        if (e.name == name) entry = &e;
    if (!entry) fail(errc::out_of_range, "unknown catalog entry " + name);

    std::optional<ColoredGraph> g;
    if (name == "s4") g = make_s4();
    if (name == "cp2") g = make_cp2();
    if (name == "s2xs2") g = make_s2xs2();
    if (name == "k3") {
        if (!k3_data)
            fail(errc::missing_data,
                 "k3 needs an external data file with the color 2..4 matchings");
        k3_validate(*k3_data);
        g = *k3_data;
    }

    // Expected-invariant gate: every entry must reproduce its record.
    const auto& exp = entry->expected;
    if (g->order() != exp.n)
        fail(errc::validation_failed, name + ": order mismatch");
    if (is_bipartite(*g).has_value() != exp.orientable)
        fail(errc::validation_failed, name + ": orientability mismatch");
    if (!is_contracted(*g)) fail(errc::validation_failed, name + ": not contracted");
    if (simplicity(*g, 1) != exp.simple)
        fail(errc::validation_failed, name + ": simplicity mismatch");
    for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (g_count(*g, ColorSet::of({i, j})) != exp.m)
                fail(errc::validation_failed, name + ": pair count mismatch");
    return *g;
}

} // namespace cryst
