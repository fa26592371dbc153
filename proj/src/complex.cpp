#include "cryst/complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cryst {

Perm identity_perm() { return Perm{0, 1, 2, 3, 4}; }

Perm inverse_perm(const Perm& p, int dim) {
    Perm q = identity_perm();
    for (int i = 0; i <= dim; ++i) q[p[i]] = static_cast<std::uint8_t>(i);
    return q;
}

int perm_sign(const Perm& p, int dim) {
    int inv = 0;
    for (int i = 0; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::uint32_t apply_perm(const Perm& p, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int l = 0; l < 5; ++l)
        if (mask & (1u << l)) out |= 1u << p[l];
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool valid_perm(const Perm& p, int dim) {
    std::uint32_t seen = 0;
    for (int i = 0; i <= dim; ++i) {
        if (p[i] > dim) return false;
        seen |= 1u << p[i];
    }
    for (int i = dim + 1; i < 5; ++i)
        if (p[i] != i) return false;
    return seen == (1u << (dim + 1)) - 1u;
}

} // namespace

CellComplex::CellComplex(int dim, std::vector<std::array<Gluing, 5>> gluings)
    : dim_(dim), gluings_(std::move(gluings)) {
    if (dim_ < 1 || dim_ > 4) fail(errc::out_of_range, "complex dim must be 1..4");
    const int nf = facet_count();
    for (int f = 0; f < nf; ++f) {
        for (int i = 0; i <= dim_; ++i) {
            const Gluing& g = gluings_[f][i];
            if (!g.glued()) continue;
            if (g.facet >= nf)
                fail(errc::validation_failed, "gluing partner out of range at facet " +
                                                  std::to_string(f) + " face " + std::to_string(i));
            if (!valid_perm(g.perm, dim_) || g.perm[i] != g.face)
                fail(errc::validation_failed, "bad gluing permutation at facet " +
                                                  std::to_string(f) + " face " + std::to_string(i));
            if (g.facet == f && g.face == i)
                fail(errc::validation_failed,
                     "face slot glued to itself at facet " + std::to_string(f));
            const Gluing& back = gluings_[g.facet][g.face];
            if (back.facet != f || back.face != i || back.perm != inverse_perm(g.perm, dim_))
                fail(errc::validation_failed, "gluing not involutive at facet " +
                                                  std::to_string(f) + " face " + std::to_string(i));
        }
    }
}

FaceClasses face_classes(const CellComplex& c) {
    const int d = c.dim();
    const int nf = c.facet_count();
    const std::uint32_t full = (1u << (d + 1)) - 1u;

    std::vector<std::uint32_t> proper; // nonempty masks missing at least one label
    for (std::uint32_t m = 1; m < full; ++m) proper.push_back(m);

    UnionFind uf(nf * 32);
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i <= d; ++i) {
            const Gluing& g = c.gluing(f, i);
            if (!g.glued()) continue;
            for (std::uint32_t m : proper) {
                if (m & (1u << i)) continue;
                uf.unite(f * 32 + static_cast<int>(m),
                         g.facet * 32 + static_cast<int>(apply_perm(g.perm, m)));
            }
        }

    FaceClasses fc;
    fc.dim = d;
    fc.facets = nf;
    fc.class_id.assign(nf * 32, -1);
    for (int f = 0; f < nf; ++f)
        for (std::uint32_t m : proper) {
            int idx = f * 32 + static_cast<int>(m);
            int root = uf.find(idx);
            int& id = fc.class_id[root];
            if (id < 0) {
                id = static_cast<int>(fc.members.size());
                fc.members.emplace_back();
                fc.corners.push_back(__builtin_popcount(m));
            }
            fc.class_id[idx] = id;
            fc.members[id].emplace_back(f, static_cast<int>(m));
        }
    for (auto& v : fc.members) std::sort(v.begin(), v.end());
    return fc;
}

int FaceClasses::count_with_corners(int k) const {
    int n = 0;
    for (int c : corners)
        if (c == k) ++n;
    return n;
}

VertexClasses vertex_classes(const CellComplex& c) {
    FaceClasses fc = face_classes(c);
    VertexClasses vc;
    const int d = c.dim();
    vc.of_corner.assign(c.facet_count() * (d + 1), -1);
    std::vector<int> remap(fc.members.size(), -1);
    int next = 0;
    for (int f = 0; f < c.facet_count(); ++f)
        for (int l = 0; l <= d; ++l) {
            int id = fc.id_of(f, 1u << l);
            if (remap[id] < 0) remap[id] = next++;
            vc.of_corner[f * (d + 1) + l] = remap[id];
        }
    vc.count = next;
    return vc;
}

FVector f_vector(const CellComplex& c) {
    FaceClasses fc = face_classes(c);
    FVector fv;
    fv.dim = c.dim();
    for (int k = 0; k < c.dim(); ++k) fv.f[k] = fc.count_with_corners(k + 1);
    fv.f[c.dim()] = c.facet_count();
    return fv;
}

CellComplex realize(const ColoredGraph& g) {
    const int d = g.dim();
    std::vector<std::array<Gluing, 5>> gl(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int c = 0; c <= d; ++c) {
            gl[v][c].facet = g.neighbor(c, v);
            gl[v][c].face = static_cast<std::int8_t>(c);
            gl[v][c].perm = identity_perm();
        }
    return CellComplex(d, std::move(gl));
}

ColoredGraph dual_graph_coloring(const CellComplex& c) {
    const int d = c.dim();
    const int nf = c.facet_count();
    if (!is_closed(c)) fail(errc::not_contracted, "complex has boundary");
    VertexClasses vc = vertex_classes(c);
    if (vc.count != d + 1)
        fail(errc::not_contracted, "complex has " + std::to_string(vc.count) +
                                       " vertices, expected " + std::to_string(d + 1));
    std::vector<std::vector<int>> m(d + 1, std::vector<int>(nf, -1));
    for (int f = 0; f < nf; ++f) {
        std::uint32_t seen = 0;
        for (int l = 0; l <= d; ++l) seen |= 1u << vc.of_corner[f * (d + 1) + l];
        if (seen != (1u << (d + 1)) - 1u)
            fail(errc::not_contracted, "facet " + std::to_string(f) + " repeats a vertex");
        for (int l = 0; l <= d; ++l)
            m[vc.of_corner[f * (d + 1) + l]][f] = c.gluing(f, l).facet;
    }
    try {
        return ColoredGraph(d, std::move(m));
    } catch (const Error& e) {
        fail(errc::not_contracted, std::string("dual graph is not properly colored: ") + e.what());
    }
}

CellComplex vertex_link(const CellComplex& c, int vertex_class) {
    const int d = c.dim();
    VertexClasses vc = vertex_classes(c);
    std::vector<std::pair<int, int>> corners; // (facet, label) with the class
    std::vector<int> index(c.facet_count() * (d + 1), -1);
    for (int f = 0; f < c.facet_count(); ++f)
        for (int l = 0; l <= d; ++l)
            if (vc.of_corner[f * (d + 1) + l] == vertex_class) {
                index[f * (d + 1) + l] = static_cast<int>(corners.size());
                corners.emplace_back(f, l);
            }
    if (corners.empty()) fail(errc::out_of_range, "no such vertex class");

    auto slot_of = [d](int omitted, int label) {
        // Position of `label` in the ascending list {0..d} minus `omitted`.
        return label - (label > omitted ? 1 : 0);
    };

    std::vector<std::array<Gluing, 5>> gl(corners.size());
    for (std::size_t k = 0; k < corners.size(); ++k) {
        auto [f, l] = corners[k];
        for (int m = 0; m <= d; ++m) {
            if (m == l) continue;
            int s = slot_of(l, m);
            const Gluing& g = c.gluing(f, m);
            if (!g.glued()) continue;
            int pl = g.perm[l];
            int partner = index[g.facet * (d + 1) + pl];
            assert(partner >= 0);
            Gluing& out = gl[k][s];
            out.facet = partner;
            out.face = static_cast<std::int8_t>(slot_of(pl, g.perm[m]));
            out.perm = identity_perm();
            for (int a = 0; a <= d; ++a) {
                if (a == l) continue;
                out.perm[slot_of(l, a)] = static_cast<std::uint8_t>(slot_of(pl, g.perm[a]));
            }
            for (int a = d; a < 5; ++a) out.perm[a] = static_cast<std::uint8_t>(a);
        }
    }
    return CellComplex(d - 1, std::move(gl));
}

namespace {

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

int perm_rank(const std::array<int, 5>& p, int len) {
    // Lehmer code.
    int rank = 0;
    for (int i = 0; i < len; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < len; ++j)
            if (p[j] < p[i]) ++smaller;
        rank = rank * (len - i) + smaller;
    }
    return rank;
}

} // namespace

CellComplex barycentric_subdivision(const CellComplex& c) {
    const int d = c.dim();
    const int nf = c.facet_count();
    const int np = static_cast<int>(factorial(d + 1));

    std::vector<std::array<int, 5>> perms;
    perms.reserve(np);
    std::array<int, 5> p{};
    std::iota(p.begin(), p.begin() + d + 1, 0);
    std::vector<int> sorted_head(p.begin(), p.begin() + d + 1);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d + 1));

    auto flag_id = [&](int f, const std::array<int, 5>& pi) {
        return f * np + perm_rank(pi, d + 1);
    };

    std::vector<std::array<Gluing, 5>> gl(static_cast<std::size_t>(nf) * np);
    for (int f = 0; f < nf; ++f)
        for (int r = 0; r < np; ++r) {
            const auto& pi = perms[r];
            int self = f * np + r;
            for (int k = 0; k < d; ++k) {
                auto pj = pi;
                std::swap(pj[k], pj[k + 1]);
                gl[self][k] = Gluing{flag_id(f, pj), static_cast<std::int8_t>(k),
                                     identity_perm()};
            }
            const Gluing& outer = c.gluing(f, pi[d]);
            if (outer.glued()) {
                auto pj = pi;
                for (int j = 0; j <= d; ++j) pj[j] = outer.perm[pi[j]];
                gl[self][d] = Gluing{flag_id(outer.facet, pj), static_cast<std::int8_t>(d),
                                     identity_perm()};
            }
        }
    return CellComplex(d, std::move(gl));
}

bool orientable(const CellComplex& c) {
    const int nf = c.facet_count();
    std::vector<int> sign(nf, 0);
    std::vector<int> stack;
    for (int s = 0; s < nf; ++s) {
        if (sign[s]) continue;
        sign[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int i = 0; i <= c.dim(); ++i) {
                const Gluing& g = c.gluing(f, i);
                if (!g.glued()) continue;
                int want = -perm_sign(g.perm, c.dim()) * sign[f];
                if (sign[g.facet] == 0) {
                    sign[g.facet] = want;
                    stack.push_back(g.facet);
                } else if (sign[g.facet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_closed(const CellComplex& c) {
    for (int f = 0; f < c.facet_count(); ++f)
        for (int i = 0; i <= c.dim(); ++i)
            if (!c.gluing(f, i).glued()) return false;
    return true;
}

bool is_dual_connected(const CellComplex& c) {
    const int nf = c.facet_count();
    if (nf == 0) return false;
    std::vector<char> seen(nf, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int i = 0; i <= c.dim(); ++i) {
            const Gluing& g = c.gluing(f, i);
            if (g.glued() && !seen[g.facet]) {
                seen[g.facet] = 1;
                ++count;
                stack.push_back(g.facet);
            }
        }
    }
    return count == nf;
}

GroupPresentation pi1_complex(const CellComplex& c) {
    const int d = c.dim();
    const int nf = c.facet_count();
    if (!is_closed(c)) fail(errc::validation_failed, "pi1 needs a closed complex");
    if (!is_dual_connected(c)) fail(errc::disconnected, "pi1 needs a connected complex");

    // BFS spanning tree over the facet graph.
    std::vector<char> in_tree(nf * (d + 1), 0);
    {
        std::vector<char> seen(nf, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            for (int i = 0; i <= d; ++i) {
                const Gluing& g = c.gluing(f, i);
                if (seen[g.facet]) continue;
                seen[g.facet] = 1;
                in_tree[f * (d + 1) + i] = 1;
                in_tree[g.facet * (d + 1) + g.face] = 1;
                queue.push_back(g.facet);
            }
        }
    }

    // Generators: one per glued slot pair off the tree; representative is the
    // lexicographically smaller (facet, slot).
    std::vector<int> gen_of(nf * (d + 1), 0); // signed generator id, 0 = tree
    int ngen = 0;
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i <= d; ++i) {
            if (in_tree[f * (d + 1) + i] || gen_of[f * (d + 1) + i] != 0) continue;
            const Gluing& g = c.gluing(f, i);
            ++ngen;
            gen_of[f * (d + 1) + i] = ngen;
            gen_of[g.facet * (d + 1) + g.face] = -ngen;
        }

    GroupPresentation pres;
    pres.num_generators = ngen;

    // Relators: walks around codimension-2 face incidences.
    FaceClasses fc = face_classes(c);
    std::vector<char> visited(nf * 32, 0);
    const std::uint32_t full = (1u << (d + 1)) - 1u;
    for (int f0 = 0; f0 < nf; ++f0)
        for (std::uint32_t m0 = 1; m0 < full; ++m0) {
            if (__builtin_popcount(m0) != d - 1) continue;
            if (visited[f0 * 32 + static_cast<int>(m0)]) continue;
            std::uint32_t rest = full & ~m0;
            int enter0 = __builtin_ctz(rest);
            int f = f0, enter = enter0;
            std::uint32_t m = m0;
            Word w;
            do {
                visited[f * 32 + static_cast<int>(m)] = 1;
                std::uint32_t other = (full & ~m) & ~(1u << enter);
                int exit = __builtin_ctz(other);
                int gen = gen_of[f * (d + 1) + exit];
                if (gen != 0) w.push_back(gen);
                const Gluing& g = c.gluing(f, exit);
                std::uint32_t nm = apply_perm(g.perm, m);
                f = g.facet;
                enter = g.face;
                m = nm;
            } while (!(f == f0 && m == m0 && enter == enter0));
            w = free_reduce(std::move(w));
            pres.relators.push_back(std::move(w));
        }
    return pres;
}

const char* ValidationReport::tier_name() const {
    if (pseudotriangulation) return "Pseudotriangulation";
    if (weak_pseudomanifold) return "WeakPseudomanifold";
    if (cell_complex_ok) return "CellComplexOK";
    return "Invalid";
}

namespace {

// Closed connected surface with chi = 2.
bool certify_sphere2(const CellComplex& link, std::string& why) {
    if (!is_closed(link)) {
        why = "2-dimensional link not closed";
        return false;
    }
    if (!is_dual_connected(link)) {
        why = "2-dimensional link not connected";
        return false;
    }
    if (f_vector(link).euler() != 2) {
        why = "2-dimensional link has Euler characteristic != 2";
        return false;
    }
    return true;
}

} // namespace

ValidationReport validate(const CellComplex& c, long tietze_budget) {
    ValidationReport rep;
    const int d = c.dim();
    const std::uint32_t full = (1u << (d + 1)) - 1u;

    // Tier 1: no two faces of one facet in the same class.
    FaceClasses fc = face_classes(c);
    for (int f = 0; f < c.facet_count(); ++f) {
        for (std::uint32_t a = 1; a < full && rep.failure.empty(); ++a)
            for (std::uint32_t b = a + 1; b < full; ++b) {
                if (__builtin_popcount(a) != __builtin_popcount(b)) continue;
                if (fc.id_of(f, a) == fc.id_of(f, b)) {
                    rep.failure = "facet " + std::to_string(f) + " faces " + std::to_string(a) +
                                  " and " + std::to_string(b) + " are identified";
                    rep.fail_facet = f;
                    rep.fail_face = static_cast<int>(a);
                    break;
                }
            }
        if (!rep.failure.empty()) return rep;
    }
    rep.cell_complex_ok = true;

    // Tier 2: closed.
    for (int f = 0; f < c.facet_count(); ++f)
        for (int i = 0; i <= d; ++i)
            if (!c.gluing(f, i).glued()) {
                rep.failure = "facet " + std::to_string(f) + " face " + std::to_string(i) +
                              " is unglued";
                rep.fail_facet = f;
                rep.fail_face = i;
                return rep;
            }
    rep.weak_pseudomanifold = true;

    // Tier 3: vertex links are spheres of one dimension down. A closed
    // 1-complex is a disjoint union of circles, nothing left to check.
    if (d == 1) {
        rep.pseudotriangulation = true;
        rep.link_status = SphereStatus::sphere;
        return rep;
    }
    VertexClasses vc = vertex_classes(c);
    SphereStatus weakest = SphereStatus::sphere;
    for (int v = 0; v < vc.count; ++v) {
        CellComplex link = vertex_link(c, v);
        ValidationReport sub;
        std::string why;
        switch (d - 1) {
            case 1:
                if (!is_closed(link) || !is_dual_connected(link))
                    why = "1-dimensional link is not a single circle";
                break;
            case 2:
                certify_sphere2(link, why);
                break;
            case 3: {
                sub = validate(link, tietze_budget); // checks its 2-sphere links
                if (!sub.pseudotriangulation) {
                    why = "link of vertex is not a closed 3-manifold complex (" + sub.failure +
                          ")";
                    break;
                }
                if (!is_dual_connected(link)) {
                    why = "3-dimensional link not connected";
                    break;
                }
                GroupPresentation pres = pi1_complex(link);
                Abelianization ab = abelianize(pres);
                if (!ab.trivial()) {
                    why = "link of vertex has first homology " + ab.to_string();
                    break;
                }
                auto tz = tietze_simplify(pres, tietze_budget);
                if (!tz.presentation.is_trivial_presentation())
                    weakest = SphereStatus::unknown;
                break;
            }
            default:
                why = "unsupported dimension";
        }
        if (!why.empty()) {
            rep.failure = "vertex " + std::to_string(v) + ": " + why;
            return rep;
        }
    }
    rep.pseudotriangulation = true;
    rep.link_status = weakest;
    return rep;
}

namespace {

bool tier1_ok(const CellComplex& c, const FaceClasses& fc) {
    const std::uint32_t full = (1u << (c.dim() + 1)) - 1u;
    for (int f = 0; f < c.facet_count(); ++f)
        for (std::uint32_t a = 1; a < full; ++a)
            for (std::uint32_t b = a + 1; b < full; ++b) {
                if (__builtin_popcount(a) != __builtin_popcount(b)) continue;
                if (fc.id_of(f, a) == fc.id_of(f, b)) return false;
            }
    return true;
}

} // namespace

bool simplicial_cell_ok(const CellComplex& c) { return tier1_ok(c, face_classes(c)); }

bool link_is_closed_manifold(const CellComplex& link) {
    if (!is_closed(link) || !is_dual_connected(link)) return false;
    if (link.dim() == 2) return f_vector(link).euler() == 2;
    if (link.dim() == 3) {
        FaceClasses lfc = face_classes(link);
        if (!tier1_ok(link, lfc)) return false;
        VertexClasses lvc = vertex_classes(link);
        for (int w = 0; w < lvc.count; ++w) {
            CellComplex surf = vertex_link(link, w);
            if (!is_closed(surf) || !is_dual_connected(surf)) return false;
            if (f_vector(surf).euler() != 2) return false;
        }
        return true;
    }
    return link.dim() == 1;
}

bool quick_manifold_check(const CellComplex& c) {
    if (!is_closed(c)) return false;
    FaceClasses fc = face_classes(c);
    if (!tier1_ok(c, fc)) return false;
    VertexClasses vc = vertex_classes(c);
    for (int v = 0; v < vc.count; ++v)
        if (!link_is_closed_manifold(vertex_link(c, v))) return false;
    return true;
}

CellComplex boundary_of_simplex(int d) {
    const int nglobal = d + 2;
    std::vector<std::vector<int>> verts(nglobal); // facet i = globals without i
    for (int i = 0; i < nglobal; ++i)
        for (int g = 0; g < nglobal; ++g)
            if (g != i) verts[i].push_back(g);

    auto pos_in = [&](int facet, int global) {
        const auto& v = verts[facet];
        return static_cast<int>(std::find(v.begin(), v.end(), global) - v.begin());
    };

    std::vector<std::array<Gluing, 5>> gl(nglobal);
    for (int i = 0; i < nglobal; ++i)
        for (int j = 0; j < nglobal; ++j) {
            if (j == i) continue;
            int slot = pos_in(i, j);
            Gluing& g = gl[i][slot];
            g.facet = j;
            g.face = static_cast<std::int8_t>(pos_in(j, i));
            g.perm = identity_perm();
            for (int a = 0; a <= d; ++a) {
                int glob = verts[i][a];
                g.perm[a] = static_cast<std::uint8_t>(glob == j ? pos_in(j, i) : pos_in(j, glob));
            }
        }
    return CellComplex(d, std::move(gl));
}

} // namespace cryst
