#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cryst/anneal.hpp"
#include "cryst/catalog.hpp"
#include "cryst/colored_graph.hpp"
#include "fixtures.hpp"

using namespace cryst;

namespace {

ColoredGraph shuffled(const ColoredGraph& g, SplitMix64& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.order() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    return relabel(g, perm);
}

} // namespace

TEST_CASE("construction validates matchings") {
    CHECK_THROWS_WITH_AS(ColoredGraph(4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
                         doctest::Contains("ColorCountMismatch"), Error);
    std::vector<std::vector<int>> loop(5, std::vector<int>{1, 0});
    loop[0] = {0, 1};
    CHECK_THROWS_WITH_AS(ColoredGraph(4, loop), doctest::Contains("LoopEdge"), Error);
    std::vector<std::vector<int>> noninv(5, std::vector<int>{1, 0, 3, 2});
    noninv[2] = {1, 2, 3, 0};
    CHECK_THROWS_WITH_AS(ColoredGraph(4, noninv), doctest::Contains("NotInvolution"), Error);
}

TEST_CASE("standard two-vertex graph") {
    ColoredGraph s4 = catalog("s4");
    CHECK(s4.order() == 2);
    CHECK(s4.dim() == 4);
    for (int c = 0; c <= 4; ++c) CHECK(multiplicity(s4, 0, 1) == 5);
    auto comp = residue(s4, ColorSet::of({0, 1}));
    REQUIRE(comp.size() == 1);
    CHECK(comp[0] == std::vector<int>{0, 1});
    for (std::uint32_t bits = 1; bits < 32; ++bits)
        CHECK(g_count(s4, ColorSet(bits)) == 1);
    CHECK(is_contracted(s4));
}

TEST_CASE("residues of the cp2 graph") {
    ColoredGraph g = catalog("cp2");
    auto comp = residue(g, ColorSet::of({0, 1}));
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == std::vector<int>{0, 1});
    CHECK(comp[1] == std::vector<int>{2, 3, 4, 5, 6, 7});

    for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(g_count(g, ColorSet::of({i, j})) == 2);
    for (std::uint32_t bits = 1; bits < 32; ++bits)
        if (__builtin_popcount(bits) == 3) CHECK(g_count(g, ColorSet(bits)) == 1);

    CHECK(g_count(g, ColorSet()) == 8); // empty set: singletons
    CHECK(is_contracted(g));
}

TEST_CASE("contractedness counterexample") {
    ColoredGraph g = fixtures::not_contracted_example();
    CHECK(is_connected(g));
    CHECK_FALSE(is_contracted(g));
    CHECK(g_count(g, g.colors().without(0)) == 2);
}

TEST_CASE("bipartiteness") {
    ColoredGraph g = catalog("cp2");
    auto cls = is_bipartite(g);
    REQUIRE(cls.has_value());
    // Classes as computed by 2-coloring: {v1,v4,v6,v8} vs {v2,v3,v5,v7}.
    std::vector<int> a, b;
    for (int v = 0; v < 8; ++v) ((*cls)[v] == (*cls)[0] ? a : b).push_back(v);
    std::vector<int> want_a{0, 3, 5, 7}, want_b{1, 2, 4, 6};
    CHECK(a == want_a);
    CHECK(b == want_b);
    for (int c = 0; c <= 4; ++c)
        for (int v = 0; v < 8; ++v) CHECK((*cls)[v] != (*cls)[g.neighbor(c, v)]);

    ColoredGraph s4 = catalog("s4");
    auto cls2 = is_bipartite(s4);
    REQUIRE(cls2.has_value());
    CHECK((*cls2)[0] != (*cls2)[1]);

    // A single 6-cycle on two colors.
    ColoredGraph hexagon(1, {{1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}});
    CHECK(is_bipartite(hexagon).has_value());
}

TEST_CASE("bipartition is fixed by any three colors") {
    for (const char* name : {"cp2", "s2xs2"}) {
        ColoredGraph g = catalog(name);
        auto full = is_bipartite(g);
        REQUIRE(full.has_value());
        for (std::uint32_t bits = 1; bits < 32; ++bits) {
            if (__builtin_popcount(bits) != 3) continue;
            ColoredGraph r = residue_graph(g, ColorSet(bits));
            auto sub = is_bipartite(r);
            REQUIRE(sub.has_value());
            bool flip = (*sub)[0] != (*full)[0];
            for (int v = 0; v < g.order(); ++v)
                CHECK((*full)[v] == (flip ? 1 - (*sub)[v] : (*sub)[v]));
        }
    }
}

TEST_CASE("multiplicity") {
    ColoredGraph g = catalog("cp2");
    CHECK(multiplicity(g, 0, 1) == 2);
    CHECK(multiplicity(g, 0, 3) == 0);
    long long total = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) total += multiplicity(g, u, v);
    CHECK(total == g.order() * 5 / 2);
}

TEST_CASE("canonical code is a complete invariant") {
    ColoredGraph g = catalog("cp2");
    CanonicalCode base = canonical_code(g);

    SplitMix64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) CHECK(canonical_code(shuffled(g, rng)) == base);

    std::vector<int> sigma{0, 1, 2, 3, 4};
    do {
        CHECK(canonical_code(recolor(g, sigma)) == base);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    CHECK(canonical_code(catalog("s4")) != base);
    CHECK_FALSE(are_isomorphic(catalog("s4"), g));
}

TEST_CASE("isomorphism matches the uniqueness argument") {
    ColoredGraph g = catalog("cp2");
    SplitMix64 rng(7);
    CHECK(are_isomorphic(g, shuffled(g, rng)));

    // Both valid completions describe the same graph.
    CHECK(are_isomorphic(fixtures::cp2_completion_of_b(), g));
    CHECK(are_isomorphic(fixtures::cp2_completion_of_c(), g));
    CHECK(are_isomorphic(fixtures::cp2_completion_of_b(), fixtures::cp2_completion_of_c()));

    // The three 8-vertex 3-sphere graphs are pairwise distinct.
    CHECK_FALSE(are_isomorphic(fixtures::s3_eight_a(), fixtures::s3_eight_b()));
    CHECK_FALSE(are_isomorphic(fixtures::s3_eight_a(), fixtures::s3_eight_c()));
    CHECK_FALSE(are_isomorphic(fixtures::s3_eight_b(), fixtures::s3_eight_c()));
}

TEST_CASE("canonical code requires connectivity") {
    ColoredGraph disconnected(1, {{1, 0, 3, 2}, {1, 0, 3, 2}});
    CHECK_THROWS_WITH_AS(canonical_code(disconnected), doctest::Contains("Disconnected"), Error);
}

TEST_CASE("g_count decreases as colors are added") {
    ColoredGraph g = catalog("s2xs2");
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t bits = static_cast<std::uint32_t>(rng.below(32));
        int c = static_cast<int>(rng.below(5));
        ColorSet d(bits & 0x1f);
        CHECK(g_count(g, d.with(c)) <= g_count(g, d));
    }
}
