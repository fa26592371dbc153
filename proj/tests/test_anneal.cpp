#include "doctest.h"

#include "cryst/anneal.hpp"
#include "cryst/catalog.hpp"
#include "cryst/io.hpp"

using namespace cryst;

namespace {

// Blow a complex up by random expanding moves (0-, 1- and 2-moves).
CellComplex inflate(const CellComplex& c, int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    CellComplex cur = c;
    for (int k = 0; k < count; ++k) {
        std::vector<Move> moves;
        for (int lvl = 0; lvl <= 2; ++lvl) {
            auto part = available_moves(cur, Move::Kind::bistellar, lvl);
            moves.insert(moves.end(), part.begin(), part.end());
        }
        cur = apply(cur, moves[rng.below(moves.size())]);
    }
    return cur;
}

} // namespace

TEST_CASE("annealer reaches the two-facet sphere") {
    AnnealConfig cfg;
    cfg.seed = 1;
    auto res = simplify(boundary_of_simplex(4), cfg);
    CHECK(res.outcome == AnnealOutcome::target_reached);
    CHECK(res.complex.facet_count() == 2);
    CHECK(are_isomorphic(dual_graph_coloring(res.complex), catalog("s4")));
}

TEST_CASE("zero steps returns the input untouched") {
    AnnealConfig cfg;
    cfg.max_steps = 0;
    CellComplex in = boundary_of_simplex(4);
    auto res = simplify(in, cfg);
    CHECK(res.outcome == AnnealOutcome::steps_exhausted);
    CHECK(res.log.entries.empty());
    CHECK(write_pst(res.complex) == write_pst(in));
}

TEST_CASE("runs are deterministic and replayable") {
    CellComplex in = inflate(realize(catalog("s4")), 6, 17);
    AnnealConfig cfg;
    cfg.seed = 12345;
    auto a = simplify(in, cfg);
    auto b = simplify(in, cfg);
    CHECK(a.log.to_string() == b.log.to_string());
    CHECK(write_pst(a.complex) == write_pst(b.complex));

    CellComplex replayed = replay(in, a.log);
    CHECK(write_pst(replayed) == write_pst(a.complex));

    MoveLog reparsed = MoveLog::parse(a.log.to_string());
    CHECK(reparsed.to_string() == a.log.to_string());
    CHECK(write_pst(replay(in, reparsed)) == write_pst(a.complex));
}

TEST_CASE("facet deltas follow the move arithmetic") {
    CellComplex in = inflate(boundary_of_simplex(4), 4, 3);
    AnnealConfig cfg;
    cfg.seed = 5;
    auto res = simplify(in, cfg);
    long long prev = f_vector(in).f[4];
    for (const auto& e : res.log.entries) {
        if (e.move.kind == Move::Kind::bistellar)
            CHECK(e.fvec.f[4] - prev == facet_delta(e.move));
        else
            CHECK(e.fvec.f[4] < prev);
        prev = e.fvec.f[4];
    }
}

TEST_CASE("inflated cp2 anneals back to its crystallization") {
    CellComplex in = inflate(realize(catalog("cp2")), 30, 71);
    CHECK(in.facet_count() > 8);
    AnnealConfig cfg;
    cfg.seed = 2024;
    auto res = simplify(in, cfg);
    REQUIRE(res.outcome == AnnealOutcome::target_reached);
    CHECK(res.complex.facet_count() == 8);
    CHECK(are_isomorphic(dual_graph_coloring(res.complex), catalog("cp2")));
}

TEST_CASE("config validation") {
    AnnealConfig cfg;
    cfg.weights = {0, 0, 0, 0, 0, 0};
    CHECK_THROWS_WITH_AS(simplify(boundary_of_simplex(4), cfg),
                         doctest::Contains("InvalidConfig"), Error);
    AnnealConfig cfg2;
    cfg2.max_steps = -1;
    CHECK_THROWS_WITH_AS(simplify(boundary_of_simplex(4), cfg2),
                         doctest::Contains("InvalidConfig"), Error);
}

TEST_CASE("facet count target") {
    AnnealConfig cfg;
    cfg.seed = 9;
    cfg.target = AnnealTarget{AnnealTarget::Kind::facet_count, 4};
    auto res = simplify(boundary_of_simplex(4), cfg);
    CHECK(res.outcome == AnnealOutcome::target_reached);
    CHECK(res.complex.facet_count() <= 4);
}
