#include "cryst/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cryst {

const char* to_string(SphereStatus s) {
    switch (s) {
        case SphereStatus::sphere: return "Sphere";
        case SphereStatus::not_sphere: return "NotSphere";
        case SphereStatus::unknown: return "Unknown";
    }
    return "?";
}

bool crystallization3_criteria(const ColoredGraph& g) {
    if (g.dim() != 3) fail(errc::wrong_dimension, "criteria need a 4-colored graph");
    if (!is_connected(g)) return false;
    int g01 = g_count(g, ColorSet::of({0, 1}));
    int g02 = g_count(g, ColorSet::of({0, 2}));
    int g03 = g_count(g, ColorSet::of({0, 3}));
    int g23 = g_count(g, ColorSet::of({2, 3}));
    int g13 = g_count(g, ColorSet::of({1, 3}));
    int g12 = g_count(g, ColorSet::of({1, 2}));
    if (g01 != g23 || g02 != g13 || g03 != g12) return false;
    return g01 + g02 + g03 == 2 + g.order() / 2;
}

bool check_3manifold_crystallization(const ColoredGraph& g) {
    if (g.dim() != 3) fail(errc::wrong_dimension, "expected dim 3");
    if (!is_contracted(g)) fail(errc::not_contracted, "graph is not contracted");
    return crystallization3_criteria(g);
}

SphereCertificate check_sphere3(const ColoredGraph& g, long tietze_budget) {
    SphereCertificate cert;
    // Abelianization is shared by all color pairs; one nontrivial witness
    // settles the question.
    Abelianization ab = abelianize(pi1_presentation(g, 0, 1));
    if (!ab.trivial()) {
        cert.status = SphereStatus::not_sphere;
        cert.witness = ab;
        return cert;
    }
    for (int i = 0; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            auto res = tietze_simplify(pi1_presentation(g, i, j), tietze_budget);
            if (res.presentation.is_trivial_presentation()) {
                cert.status = SphereStatus::sphere;
                return cert;
            }
        }
    cert.status = SphereStatus::unknown;
    return cert;
}

bool Crystallization4Report::all_residues_pass_criteria() const {
    return std::all_of(residue_criteria.begin(), residue_criteria.end(), [](bool b) { return b; });
}

SphereStatus Crystallization4Report::weakest() const {
    auto rank = [](SphereStatus s) {
        switch (s) {
            case SphereStatus::not_sphere: return 0;
            case SphereStatus::unknown: return 1;
            case SphereStatus::sphere: return 2;
        }
        return 0;
    };
    SphereStatus w = SphereStatus::sphere;
    for (const auto& c : residue_cert)
        if (rank(c.status) < rank(w)) w = c.status;
    return w;
}

Crystallization4Report check_4manifold_crystallization(const ColoredGraph& g,
                                                       long tietze_budget) {
    if (g.dim() != 4) fail(errc::wrong_dimension, "expected dim 4");
    if (!is_contracted(g)) fail(errc::not_contracted, "graph is not contracted");
    Crystallization4Report rep;
    for (int c = 0; c <= 4; ++c) {
        ColoredGraph res = residue_graph(g, g.colors().without(c));
        rep.residue_criteria[c] = crystallization3_criteria(res);
        if (rep.residue_criteria[c]) rep.residue_cert[c] = check_sphere3(res, tietze_budget);
    }
    return rep;
}

bool simplicity(const ColoredGraph& g, int k) {
    if (k < 1 || k > g.dim() - 1) fail(errc::out_of_range, "k must be in 1..dim-1");
    const int size = g.dim() - k;
    const std::uint32_t full = (1u << (g.dim() + 1)) - 1;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
        if (__builtin_popcount(bits) != size) continue;
        if (g_count(g, ColorSet(bits)) != 1) return false;
    }
    return true;
}

InvariantReport simple_report(const ColoredGraph& g, long tietze_budget) {
    auto cert = check_4manifold_crystallization(g, tietze_budget);
    if (!cert.all_residues_pass_criteria())
        fail(errc::validation_failed, "a 4-color residue fails the counting conditions");
    if (cert.weakest() == SphereStatus::not_sphere)
        fail(errc::validation_failed, "a 4-color residue is certified non-spherical");

    InvariantReport rep;
    rep.n = g.order();
    rep.bipartite = is_bipartite(g).has_value();
    rep.contracted = true;
    for (int k = 1; k <= 3; ++k) rep.simple_degrees[k] = simplicity(g, k);

    const std::uint32_t full = (1u << 5) - 1;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
        int sz = __builtin_popcount(bits);
        if (sz < 2 || sz > 4) continue;
        rep.g[bits] = g_count(g, ColorSet(bits));
    }

    bool constant = true;
    int m = -1;
    for (int i = 0; i <= 4 && constant; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            int v = rep.g.at(ColorSet::of({i, j}).bits());
            if (m < 0) m = v;
            if (v != m) {
                constant = false;
                break;
            }
        }
    if (constant) rep.m = m;

    if (rep.simple_degrees[1]) {
        // n = 6m - 4 and beta2 = m - 1 are forced for simple crystallizations.
        assert(rep.m && rep.n == 6 * *rep.m - 4);
        rep.beta2 = *rep.m - 1;
        rep.euler = 2 + *rep.beta2;
        long long n = rep.n;
        long long f1 = (n + 18 - 6 * *rep.beta2) / 2;
        long long f3 = 5 * n / 2;
        long long f2 = *rep.euler - 5 + f1 + f3 - n;
        rep.f_vector = std::array<long long, 5>{5, f1, f2, f3, n};
    }
    return rep;
}

std::string FormProfile::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](long long k, const char* name) {
        if (k == 0) return;
        if (!first) os << " + ";
        first = false;
        if (k != 1) os << k;
        os << name;
    };
    if (even) {
        term(e8_minus, "(-E8)");
        term(hyperbolic, "H");
    } else {
        term(plus_ones, "[+1]");
        term(minus_ones, "[-1]");
    }
    if (first) os << "0";
    return os.str();
}

FormProfile hypersurface_profile(long long d) {
    if (d < 1) fail(errc::out_of_range, "degree must be positive");
    FormProfile p;
    if (d % 2 == 1) {
        p.even = false;
        long long num = d * d * d - 6 * d * d + 11 * d - 3;
        assert(num % 3 == 0);
        p.plus_ones = num / 3;
        long long mu = (d - 1) * (2 * d * d - 4 * d + 3);
        assert(mu % 3 == 0);
        p.minus_ones = mu / 3;
    } else {
        p.even = true;
        long long l = d * (d * d - 4);
        assert(l % 24 == 0);
        p.e8_minus = l / 24;
        long long h = d * d * d - 6 * d * d + 11 * d - 3;
        assert(h % 3 == 0);
        p.hyperbolic = h / 3;
    }
    return p;
}

} // namespace cryst
