#include "doctest.h"

#include "cryst/anneal.hpp"
#include "cryst/catalog.hpp"
#include "cryst/census.hpp"
#include "fixtures.hpp"

using namespace cryst;

TEST_CASE("two-vertex censuses") {
    auto c3 = census_3manifold(2);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].graph.order() == 2);
    CHECK(c3[0].sphere.status == SphereStatus::sphere);

    auto c4 = census_simple_4(2);
    REQUIRE(c4.classes.size() == 1);
    CHECK(are_isomorphic(c4.classes[0], catalog("s4")));
    CHECK(c4.unknown.empty());
}

TEST_CASE("guards") {
    CHECK_THROWS_WITH_AS(census_3manifold(14), doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(census_3manifold(7), doctest::Contains("NOdd"), Error);
    CHECK_THROWS_WITH_AS(census_simple_4(6), doctest::Contains("ValidationFailed"), Error);
    CHECK_THROWS_WITH_AS(census_simple_4(20, {}), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("eight-vertex 3-manifold census") {
    auto entries = census_3manifold(8);
    CHECK(entries.size() == 10);

    int spheres = 0, pair2 = 0;
    for (const auto& e : entries) {
        CHECK(is_contracted(e.graph));
        CHECK(crystallization3_criteria(e.graph));
        if (e.sphere.status == SphereStatus::sphere) {
            ++spheres;
            if (e.g01 == 2 && e.g02 == 2 && e.g03 == 2) ++pair2;
        }
        CHECK(e.sphere.status != SphereStatus::unknown);
    }
    CHECK(spheres == 7);
    CHECK(pair2 == 3);

    // Duplicate-free and closed under relabeling.
    SplitMix64 rng(5);
    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b)
            CHECK_FALSE(are_isomorphic(entries[a].graph, entries[b].graph));
        std::vector<int> perm(8);
        for (int v = 0; v < 8; ++v) perm[v] = v;
        for (int v = 7; v > 0; --v) std::swap(perm[v], perm[rng.below(v + 1)]);
        ColoredGraph shuffled = relabel(entries[a].graph, perm);
        bool member = false;
        for (const auto& e : entries) member = member || are_isomorphic(e.graph, shuffled);
        CHECK(member);
    }

    // The three all-pair-count-2 sphere classes are the known eight-vertex
    // graphs from the uniqueness argument.
    for (const ColoredGraph& g :
         {fixtures::s3_eight_a(), fixtures::s3_eight_b(), fixtures::s3_eight_c()}) {
        bool member = false;
        for (const auto& e : entries) member = member || are_isomorphic(e.graph, g);
        CHECK(member);
    }
}

TEST_CASE("eight-vertex simple crystallization census") {
    auto result = census_simple_4(8);
    REQUIRE(result.classes.size() == 1);
    CHECK(result.unknown.empty());
    CHECK(are_isomorphic(result.classes[0], catalog("cp2")));

    const ColoredGraph& g = result.classes[0];
    CHECK(is_bipartite(g).has_value());
    CHECK(simplicity(g, 1));
    auto cert = check_4manifold_crystallization(g);
    CHECK(cert.is_crystallization());
    InvariantReport rep = simple_report(g);
    CHECK(*rep.m == 2);
    CHECK(rep.n == 6 * *rep.m - 4);
}
