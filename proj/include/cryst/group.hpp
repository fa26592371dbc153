#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cryst/colored_graph.hpp"

namespace cryst {

using bigint = boost::multiprecision::cpp_int;

/// Words are sequences of signed generator indices (1..s, sign = exponent).
using Word = std::vector<int>;

struct GroupPresentation {
    int num_generators = 0;
    std::vector<Word> relators; // stored freely reduced

    bool is_trivial_presentation() const { return num_generators == 0; }
};

/// H1 data: free rank plus torsion coefficients in divisibility order.
struct Abelianization {
    int free_rank = 0;
    std::vector<bigint> torsion; // each > 1, each divides the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const Abelianization&) const = default;

    std::string to_string() const; // "0", "Z", "Z^2 + Z/2", ...
};

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);

/// Fundamental-group presentation of the manifold encoded by a
/// crystallization, read off the two-color cycles after dropping colors i,j.
/// Generators are the components of the residue on the remaining colors,
/// minus one designated component; one cycle's relator is redundant and is
/// dropped (kept when dim == 2).
GroupPresentation pi1_presentation(const ColoredGraph& g, int i, int j);

enum class TietzeStatus { reduced, budget_exhausted };

struct TietzeResult {
    GroupPresentation presentation;
    TietzeStatus status = TietzeStatus::reduced;
    long applications = 0;
};

constexpr long kDefaultTietzeBudget = 100000;

/// Deterministic presentation simplification: free/cyclic reduction, empty
/// relator removal, single-occurrence generator elimination, and greedy
/// length-reducing relator substitutions. Preserves the isomorphism class.
TietzeResult tietze_simplify(const GroupPresentation& p, long budget = kDefaultTietzeBudget);

Abelianization abelianize(const GroupPresentation& p);

/// Fast path for "is H1 zero": modular rank filters over GF(2) and GF(3)
/// settle most nontrivial cases before the exact Smith form runs.
bool h1_trivial(const GroupPresentation& p);

/// Smith normal form of an integer matrix (rows x cols), with unimodular
/// transforms U (rows x rows) and V (cols x cols) such that U*A*V = D.
struct SmithResult {
    std::vector<bigint> diagonal; // invariant factors, nonneg, divisibility chain
    std::vector<std::vector<bigint>> u;
    std::vector<std::vector<bigint>> v;
};

SmithResult smith_normal_form(std::vector<std::vector<bigint>> a);

/// "< x1, x2 | x1 x2^-1 x1 >"
std::string to_string(const GroupPresentation& p);

} // namespace cryst
