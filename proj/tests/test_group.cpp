#include "doctest.h"

#include "cryst/anneal.hpp"
#include "cryst/catalog.hpp"
#include "cryst/group.hpp"
#include "fixtures.hpp"

using namespace cryst;

TEST_CASE("word reduction") {
    CHECK(free_reduce({1, -1}) == Word{});
    CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
    CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
}

TEST_CASE("tietze trivializes easy presentations") {
    GroupPresentation p1{1, {{1}}};
    auto r1 = tietze_simplify(p1);
    CHECK(r1.status == TietzeStatus::reduced);
    CHECK(r1.presentation.is_trivial_presentation());

    // Eliminating y from <x,y | xyx^-1y^-1, y> leaves the free group on x.
    GroupPresentation p2{2, {{1, 2, -1, -2}, {2}}};
    auto r2 = tietze_simplify(p2);
    CHECK(r2.presentation.num_generators == 1);
    CHECK(r2.presentation.relators.empty());
    CHECK(abelianize(r2.presentation).to_string() == "Z");

    GroupPresentation p3{2, {{1, 2}, {2}}};
    auto r3 = tietze_simplify(p3);
    CHECK(r3.presentation.is_trivial_presentation());
}

TEST_CASE("abelianization shapes") {
    CHECK(abelianize(GroupPresentation{1, {{1, 1}}}).to_string() == "Z/2");
    CHECK(abelianize(GroupPresentation{1, {}}).to_string() == "Z");
    CHECK(abelianize(GroupPresentation{0, {}}).trivial());
    Abelianization z2 = abelianize(GroupPresentation{1, {{1, 1}}});
    CHECK(z2.free_rank == 0);
    REQUIRE(z2.torsion.size() == 1);
    CHECK(z2.torsion[0] == 2);
}

TEST_CASE("smith normal form is exact") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(6));
        int cols = 1 + static_cast<int>(rng.below(6));
        std::vector<std::vector<bigint>> a(rows, std::vector<bigint>(cols));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<long long>(rng.below(9)) - 4;
        auto res = smith_normal_form(a);

        // Divisibility chain.
        for (std::size_t k = 1; k < res.diagonal.size(); ++k) {
            if (res.diagonal[k - 1] == 0) {
                CHECK(res.diagonal[k] == 0);
            } else {
                CHECK(res.diagonal[k] % res.diagonal[k - 1] == 0);
            }
        }

        // U * A * V reproduces the diagonal.
        auto mat_mul = [](const std::vector<std::vector<bigint>>& x,
                          const std::vector<std::vector<bigint>>& y) {
            std::size_t r = x.size(), mid = y.size(), c = y.empty() ? 0 : y[0].size();
            std::vector<std::vector<bigint>> out(r, std::vector<bigint>(c, 0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t k = 0; k < mid; ++k)
                    for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][k] * y[k][j];
            return out;
        };
        auto d = mat_mul(mat_mul(res.u, a), res.v);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                bigint want = (i == j && i < static_cast<int>(res.diagonal.size()))
                                  ? res.diagonal[i]
                                  : bigint(0);
                CHECK(d[i][j] == want);
            }
    }
}

TEST_CASE("presentation from the two-vertex graph is trivial") {
    GroupPresentation p = pi1_presentation(catalog("s4"), 0, 1);
    CHECK(p.num_generators == 0);
    CHECK(p.relators.empty());
    CHECK_THROWS_WITH_AS(pi1_presentation(catalog("s4"), 1, 1), doctest::Contains("SameColor"),
                         Error);
}

TEST_CASE("known fundamental groups of eight-vertex graphs") {
    // Both counting conditions hold for this graph, yet pi1 = Z.
    Abelianization z = abelianize(pi1_presentation(fixtures::s3_criteria_but_z(), 0, 1));
    CHECK(z.free_rank == 1);
    CHECK(z.torsion.empty());

    Abelianization z2 = abelianize(pi1_presentation(fixtures::s3_criteria_but_z2(), 0, 1));
    CHECK(z2.free_rank == 0);
    REQUIRE(z2.torsion.size() == 1);
    CHECK(z2.torsion[0] == 2);

    // The spoiled 5-color completion has a residue with H1 = Z/2 (the one
    // omitting color 0), while the other four residues stay simply connected.
    ColoredGraph bad = fixtures::bad_completion_of_b();
    ColoredGraph res = residue_graph(bad, ColorSet::of({1, 2, 3, 4}));
    Abelianization w = abelianize(pi1_presentation(res, 0, 1));
    CHECK(w.free_rank == 0);
    REQUIRE(w.torsion.size() == 1);
    CHECK(w.torsion[0] == 2);
    for (int c = 1; c <= 4; ++c) {
        ColoredGraph other = residue_graph(bad, bad.colors().without(c));
        CHECK(abelianize(pi1_presentation(other, 0, 1)).trivial());
    }
}

TEST_CASE("cp2 residue presentations are trivial over every color pair") {
    ColoredGraph g = catalog("cp2");
    ColoredGraph res = residue_graph(g, ColorSet::of({0, 1, 2, 3}));
    auto tz = tietze_simplify(pi1_presentation(res, 0, 1), 10000);
    CHECK(tz.presentation.is_trivial_presentation());

    for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            CHECK(abelianize(pi1_presentation(g, i, j)).trivial());
}

TEST_CASE("tietze preserves the abelianization") {
    std::vector<GroupPresentation> samples = {
        pi1_presentation(fixtures::s3_criteria_but_z(), 0, 1),
        pi1_presentation(fixtures::s3_criteria_but_z2(), 1, 2),
        pi1_presentation(fixtures::s3_eight_a(), 0, 2),
        GroupPresentation{3, {{1, 1, 2, -3}, {2, 2, 2}, {3, 1}}},
    };
    for (const auto& p : samples) {
        auto tz = tietze_simplify(p);
        CHECK(abelianize(tz.presentation) == abelianize(p));
    }
}

TEST_CASE("presentation pretty printer") {
    GroupPresentation p{2, {{1, -2, 1}, {2}}};
    CHECK(to_string(p) == "<x1,x2 | x1 x2^-1 x1, x2>");
}
