#include "doctest.h"

#include <map>

#include "cryst/catalog.hpp"
#include "cryst/invariants.hpp"
#include "cryst/io.hpp"

using namespace cryst;

TEST_CASE("catalog entries reproduce their expected invariants") {
    for (const auto& entry : catalog_entries()) {
        if (entry.needs_data) continue; // k3 exercised separately
        ColoredGraph g = catalog(entry.name);
        InvariantReport rep = simple_report(g);
        CHECK(rep.n == entry.expected.n);
        CHECK(*rep.m == entry.expected.m);
        CHECK(*rep.beta2 == entry.expected.beta2);
        CHECK(rep.bipartite == entry.expected.orientable);
        CHECK(rep.simple_degrees[1] == entry.expected.simple);
    }
}

TEST_CASE("k3 needs a data file") {
    CHECK_THROWS_WITH_AS(catalog("k3"), doctest::Contains("MissingData"), Error);
    CHECK_THROWS_WITH_AS(catalog("nope"), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("published k3 colors") {
    auto mats = k3_colors01();
    REQUIRE(mats.size() == 2);
    ColoredGraph g(1, mats); // the two-color residue on its own
    CHECK(g.order() == 134);

    auto comps = residue(g, ColorSet::of({0, 1}));
    CHECK(comps.size() == 23);
    std::map<int, int> profile;
    for (const auto& c : comps) profile[static_cast<int>(c.size())]++;
    std::map<int, int> want{{2, 5}, {4, 7}, {6, 6}, {8, 1}, {10, 2}, {16, 2}};
    CHECK(profile == want);

    CHECK(3 * 23 == 134 / 2 + 2);
}

TEST_CASE("k3 validator rejects wrong data") {
    // Right order, wrong structure: the pair counts are 1, not 23.
    std::vector<std::vector<int>> m(5, std::vector<int>(134));
    auto built = k3_colors01();
    m[0] = built[0];
    m[1] = built[1];
    for (int c = 2; c <= 4; ++c) m[c] = built[0];
    CHECK_THROWS_WITH_AS(k3_validate(ColoredGraph(4, m)),
                         doctest::Contains("ValidationFailed"), Error);
}

TEST_CASE("gem format round trip") {
    ColoredGraph s4 = catalog("s4");
    CHECK(write_gem(s4) == "gem 5 2\n0: 0-1\n1: 0-1\n2: 0-1\n3: 0-1\n4: 0-1\n");

    for (const char* name : {"s4", "cp2", "s2xs2"}) {
        ColoredGraph g = catalog(name);
        std::string text = write_gem(g);
        ColoredGraph back = parse_gem(text);
        CHECK(back == g);
        CHECK(write_gem(back) == text); // normalized output is a fixed point
    }

    // Comments and loose pair order are accepted.
    ColoredGraph loose = parse_gem("# comment\ngem 5 2\n0: 0-1\n1: 0-1 # x\n2: 0-1\n3: 0-1\n4: 0-1\n");
    CHECK(loose == s4);
}

TEST_CASE("gem parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_gem("gem 5 2\n0: 0-1\n1: 0-1\n2: 0-1\n3: 0-1\n4:\n"),
                         doctest::Contains("line 6"), Error);
    CHECK_THROWS_WITH_AS(parse_gem("gem 5 3\n"), doctest::Contains("even"), Error);
    CHECK_THROWS_WITH_AS(parse_gem("pst 4 2\n"), doctest::Contains("header"), Error);
    CHECK_THROWS_WITH_AS(parse_gem("gem 5 2\n0: 0-0\n1: 0-1\n2: 0-1\n3: 0-1\n4: 0-1\n"),
                         doctest::Contains("loop"), Error);
}

TEST_CASE("dot export is stable") {
    ColoredGraph s4 = catalog("s4");
    std::string dot = export_dot(s4);
    CHECK(dot == export_dot(s4));
    int edges = 0;
    for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 5);

    std::string cp2dot = export_dot(catalog("cp2"));
    int cp2_edges = 0;
    for (std::size_t pos = 0; (pos = cp2dot.find(" -- ", pos)) != std::string::npos; ++pos)
        ++cp2_edges;
    CHECK(cp2_edges == 20);
}
