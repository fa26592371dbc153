#pragma once

#include <array>
#include <map>
#include <optional>

#include "cryst/colored_graph.hpp"
#include "cryst/group.hpp"

namespace cryst {

enum class SphereStatus { sphere, not_sphere, unknown };

const char* to_string(SphereStatus s);

/// Outcome of the 3-sphere test: pi1 triviality within a Tietze budget, or a
/// nontrivial abelianization witness, or unknown when the budget runs out.
struct SphereCertificate {
    SphereStatus status = SphereStatus::unknown;
    Abelianization witness; // meaningful for not_sphere

    bool is_sphere() const { return status == SphereStatus::sphere; }
};

/// Both counting conditions for a connected 4-colored graph to encode a
/// closed 3-manifold: complementary pair counts agree and
/// g01 + g02 + g03 = 2 + n/2.
bool crystallization3_criteria(const ColoredGraph& g);

/// Checked variant for standalone 4-colored graphs: requires dim 3 and a
/// contracted input.
bool check_3manifold_crystallization(const ColoredGraph& g);

/// pre: crystallization3_criteria holds.
SphereCertificate check_sphere3(const ColoredGraph& g, long tietze_budget = kDefaultTietzeBudget);

struct Crystallization4Report {
    std::array<bool, 5> residue_criteria{};       // counting conditions per dropped color
    std::array<SphereCertificate, 5> residue_cert{};
    bool all_residues_pass_criteria() const;
    /// not_sphere < unknown < sphere over the five residues; only meaningful
    /// when the criteria all hold.
    SphereStatus weakest() const;
    bool is_crystallization() const {
        return all_residues_pass_criteria() && weakest() == SphereStatus::sphere;
    }
};

/// pre: dim 4, connected, contracted. Certifies every 4-color residue as an
/// S^3 crystallization.
Crystallization4Report check_4manifold_crystallization(const ColoredGraph& g,
                                                       long tietze_budget = kDefaultTietzeBudget);

/// True iff every residue on dim-k colors is connected, 1 <= k <= dim-1.
bool simplicity(const ColoredGraph& g, int k);

struct InvariantReport {
    int n = 0;
    std::map<std::uint32_t, int> g; // ColorSet bits -> component count (|D| in {2,3,4})
    bool bipartite = false;
    bool contracted = false;
    std::array<bool, 4> simple_degrees{}; // index k = 1..dim-1
    std::optional<int> m;                 // common g_ij when constant
    std::optional<int> beta2;             // m - 1 when simple
    std::optional<int> euler;             // 2 + beta2
    std::optional<std::array<long long, 5>> f_vector;
};

/// pre: dim 4 and check_4manifold_crystallization passes. Fills m, beta2 and
/// the f-vector implied by f0 = 5, 2 f3 = 5 f4 and the Euler relation.
InvariantReport simple_report(const ColoredGraph& g, long tietze_budget = kDefaultTietzeBudget);

/// Intersection form of a closed oriented simply connected 4-manifold,
/// presented as a sum of standard blocks.
struct FormProfile {
    bool even = false;
    long long plus_ones = 0;   // [+1] blocks (odd case)
    long long minus_ones = 0;  // [-1] blocks (odd case)
    long long e8_minus = 0;    // (-E8) blocks (even case)
    long long hyperbolic = 0;  // H blocks (even case)

    long long rank() const {
        return even ? 8 * e8_minus + 2 * hyperbolic : plus_ones + minus_ones;
    }
    long long signature() const { return even ? -8 * e8_minus : plus_ones - minus_ones; }

    std::string to_string() const;
};

/// Intersection form of the degree-d complex hypersurface in CP^3 from the
/// closed-form block counts.
FormProfile hypersurface_profile(long long deg);

} // namespace cryst
