#include "cryst/moves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cryst {

std::string Move::to_string() const {
    std::ostringstream os;
    if (kind == Kind::bistellar)
        os << "b" << level;
    else
        os << "ec";
    os << " " << facet << "/" << mask;
    return os.str();
}

std::optional<Move> parse_move(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    std::string site;
    if (!(is >> kind >> site)) return std::nullopt;
    Move m;
    if (kind == "ec") {
        m.kind = Move::Kind::edge_contraction;
    } else if (kind.size() == 2 && kind[0] == 'b' && kind[1] >= '0' && kind[1] <= '4') {
        m.kind = Move::Kind::bistellar;
        m.level = kind[1] - '0';
    } else {
        return std::nullopt;
    }
    auto slash = site.find('/');
    if (slash == std::string::npos) return std::nullopt;
    try {
        m.facet = std::stoi(site.substr(0, slash));
        m.mask = static_cast<std::uint32_t>(std::stoul(site.substr(slash + 1)));
    } catch (...) {
        return std::nullopt;
    }
    return m;
}

int facet_delta(const Move& m) {
    if (m.kind != Move::Kind::bistellar)
        fail(errc::out_of_range, "facet_delta is defined for bistellar moves");
    return 4 - 2 * m.level;
}

namespace {

struct StarPattern {
    int level = 0;                       // i
    std::vector<int> delta_classes;      // sorted vertex classes of delta (i >= 1)
    std::vector<int> gamma_classes;      // sorted apex classes (i >= 1)
    std::vector<int> facet_for;          // gamma role -> facet
    std::vector<std::uint32_t> mask_for; // gamma role -> delta mask in that facet
};

int corner_with_class(const CellComplex& c, const VertexClasses& vc, int f, int cls) {
    for (int l = 0; l <= c.dim(); ++l)
        if (vc.of_corner[f * (c.dim() + 1) + l] == cls) return l;
    return -1;
}

// Recognizes the i+1 facets around a common (4-i)-face as the boundary-of-
// simplex star the move replaces. Works with global vertex classes: within a
// valid complex every facet has distinct corner classes, so all role
// correspondences are class-determined.
std::optional<StarPattern> star_pattern(const CellComplex& c, const FaceClasses& fc,
                                        const VertexClasses& vc, int delta_class, int i) {
    const int d = c.dim();
    const auto& inc = fc.members[delta_class];
    if (static_cast<int>(inc.size()) != i + 1) return std::nullopt;
    for (std::size_t a = 1; a < inc.size(); ++a)
        if (inc[a].first == inc[a - 1].first) return std::nullopt;

    StarPattern sp;
    sp.level = i;
    for (int l = 0; l <= d; ++l)
        if (inc[0].second & (1 << l)) sp.delta_classes.push_back(vc.of_corner[inc[0].first * (d + 1) + l]);
    std::sort(sp.delta_classes.begin(), sp.delta_classes.end());

    // Apex classes per facet; the missing-class map must be a bijection onto
    // an (i+1)-set.
    std::vector<std::vector<int>> apex(inc.size());
    std::vector<int> all;
    for (std::size_t k = 0; k < inc.size(); ++k) {
        auto [f, m] = inc[k];
        for (int l = 0; l <= d; ++l)
            if (!(m & (1 << l))) apex[k].push_back(vc.of_corner[f * (d + 1) + l]);
        all.insert(all.end(), apex[k].begin(), apex[k].end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (static_cast<int>(all.size()) != i + 1) return std::nullopt;
    sp.gamma_classes = all;
    sp.facet_for.assign(i + 1, -1);
    sp.mask_for.assign(i + 1, 0);
    for (std::size_t k = 0; k < inc.size(); ++k) {
        int missing = -1;
        for (int g = 0; g <= i; ++g) {
            if (std::find(apex[k].begin(), apex[k].end(), sp.gamma_classes[g]) == apex[k].end()) {
                if (missing >= 0) return std::nullopt; // two classes absent
                missing = g;
            }
        }
        if (missing < 0 || sp.facet_for[missing] >= 0) return std::nullopt;
        sp.facet_for[missing] = inc[k].first;
        sp.mask_for[missing] = static_cast<std::uint32_t>(inc[k].second);
    }

    // Every apex-opposite face must be glued to the star facet of that apex
    // class, entering opposite this facet's own gamma class.
    for (int g = 0; g <= i; ++g) {
        int f = sp.facet_for[g];
        for (int l = 0; l <= d; ++l) {
            if (sp.mask_for[g] & (1u << l)) continue;
            int cls = vc.of_corner[f * (d + 1) + l];
            int target = static_cast<int>(std::find(sp.gamma_classes.begin(),
                                                    sp.gamma_classes.end(), cls) -
                                          sp.gamma_classes.begin());
            const Gluing& gl = c.gluing(f, l);
            if (!gl.glued() || gl.facet != sp.facet_for[target]) return std::nullopt;
            if (vc.of_corner[gl.facet * (d + 1) + gl.face] != sp.gamma_classes[g])
                return std::nullopt;
            if (apply_perm(gl.perm, sp.mask_for[g]) != sp.mask_for[target]) return std::nullopt;
        }
    }
    return sp;
}

struct Role {
    bool is_gamma = false;
    int id = 0;
};

} // namespace

std::optional<CellComplex> try_edge_contraction(const CellComplex& c, int facet,
                                                std::uint32_t edge_mask) {
    const int d = c.dim();
    if (__builtin_popcount(edge_mask) != 2) return std::nullopt;
    FaceClasses fc = face_classes(c);
    VertexClasses vc = vertex_classes(c);
    int cls = fc.id_of(facet, edge_mask);
    if (cls < 0) return std::nullopt;

    int l1 = __builtin_ctz(edge_mask);
    int l2 = __builtin_ctz(edge_mask & ~(1u << l1));
    int u = vc.of_corner[facet * (d + 1) + l1];
    int v = vc.of_corner[facet * (d + 1) + l2];

    const auto& inc = fc.members[cls];
    std::vector<char> in_star(c.facet_count(), 0);
    for (auto [f, m] : inc) in_star[f] = 1;

    // A surviving facet seeing both endpoint classes would keep a loop edge.
    for (int f = 0; f < c.facet_count(); ++f) {
        if (in_star[f]) continue;
        bool has_u = corner_with_class(c, vc, f, u) >= 0;
        bool has_v = corner_with_class(c, vc, f, v) >= 0;
        if (has_u && has_v) return std::nullopt;
    }


    std::vector<int> new_id(c.facet_count(), -1);
    int survivors = 0;
    for (int f = 0; f < c.facet_count(); ++f)
        if (!in_star[f]) new_id[f] = survivors++;
    if (survivors == 0) return std::nullopt;

    std::vector<int> alpha(c.facet_count(), -1), beta(c.facet_count(), -1);
    for (auto [f, m] : inc) {
        alpha[f] = corner_with_class(c, vc, f, u);
        beta[f] = corner_with_class(c, vc, f, v);
        if (alpha[f] < 0 || beta[f] < 0) return std::nullopt;
    }

    std::vector<std::array<Gluing, 5>> gl(survivors);
    for (int f = 0; f < c.facet_count(); ++f) {
        if (in_star[f]) continue;
        for (int s = 0; s <= d; ++s) {
            const Gluing& g = c.gluing(f, s);
            if (!g.glued()) return std::nullopt; // contraction needs a closed complex
            if (in_star[g.facet]) continue;      // rewired below
            gl[new_id[f]][s] = Gluing{new_id[g.facet], g.face, g.perm};
        }
    }

    // Chase identification chains through the collapsing facets.
    std::vector<char> done(c.facet_count() * (d + 1), 0);
    for (int f = 0; f < c.facet_count(); ++f) {
        if (in_star[f]) continue;
        for (int s = 0; s <= d; ++s) {
            if (done[f * (d + 1) + s]) continue;
            const Gluing& g0 = c.gluing(f, s);
            if (!in_star[g0.facet]) continue;
            int cur = g0.facet;
            int slot = g0.face;
            Perm acc = g0.perm;
            while (true) {
                if (slot != alpha[cur] && slot != beta[cur]) return std::nullopt;
                int out = (slot == alpha[cur]) ? beta[cur] : alpha[cur];
                Perm swp = identity_perm();
                std::swap(swp[alpha[cur]], swp[beta[cur]]);
                for (int l = 0; l < 5; ++l) acc[l] = swp[acc[l]];
                const Gluing& gn = c.gluing(cur, out);
                if (!gn.glued()) return std::nullopt;
                for (int l = 0; l < 5; ++l) acc[l] = gn.perm[acc[l]];
                if (!in_star[gn.facet]) {
                    int b = gn.facet, t = gn.face;
                    gl[new_id[f]][s] = Gluing{new_id[b], static_cast<std::int8_t>(t), acc};
                    gl[new_id[b]][t] =
                        Gluing{new_id[f], static_cast<std::int8_t>(s), inverse_perm(acc, d)};
                    done[f * (d + 1) + s] = 1;
                    done[b * (d + 1) + t] = 1;
                    break;
                }
                cur = gn.facet;
                slot = gn.face;
            }
        }
    }

    // Only links of classes meeting the collapsed star can change; every
    // other vertex keeps its link facet-for-facet.
    std::vector<char> suspect_old(vc.count, 0);
    for (auto [f, m] : inc)
        for (int l = 0; l <= d; ++l) suspect_old[vc.of_corner[f * (d + 1) + l]] = 1;

    try {
        CellComplex out(d, std::move(gl));
        // A legal contraction leaves a pseudotriangulation behind. The
        // quotient can pinch the space while every link stays a closed
        // 3-manifold complex, so the Euler characteristic must survive and
        // the affected links must stay (homology) spheres.
        if (!is_closed(out) || !simplicial_cell_ok(out)) return std::nullopt;
        if (f_vector(out).euler() != f_vector(c).euler()) return std::nullopt;
        VertexClasses out_vc = vertex_classes(out);
        std::vector<char> suspect_new(out_vc.count, 0);
        for (int f = 0; f < c.facet_count(); ++f) {
            if (in_star[f]) continue;
            for (int l = 0; l <= d; ++l)
                if (suspect_old[vc.of_corner[f * (d + 1) + l]])
                    suspect_new[out_vc.of_corner[new_id[f] * (d + 1) + l]] = 1;
        }
        for (int w = 0; w < out_vc.count; ++w) {
            if (!suspect_new[w]) continue;
            CellComplex link = vertex_link(out, w);
            if (!link_is_closed_manifold(link)) return std::nullopt;
            if (!h1_trivial(pi1_complex(link))) return std::nullopt;
        }
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<Move> available_moves(const CellComplex& c, Move::Kind kind, int level) {
    std::vector<Move> out;
    const int d = c.dim();
    if (kind == Move::Kind::bistellar && level == 0) {
        for (int f = 0; f < c.facet_count(); ++f)
            out.push_back(Move{kind, 0, f, (1u << (d + 1)) - 1u});
        return out;
    }
    FaceClasses fc = face_classes(c);
    VertexClasses vc = vertex_classes(c);
    if (kind == Move::Kind::bistellar) {
        for (std::size_t id = 0; id < fc.members.size(); ++id) {
            if (fc.corners[id] != d + 1 - level) continue;
            if (star_pattern(c, fc, vc, static_cast<int>(id), level)) {
                auto [f, m] = fc.members[id][0];
                out.push_back(Move{kind, level, f, static_cast<std::uint32_t>(m)});
            }
        }
    } else {
        for (std::size_t id = 0; id < fc.members.size(); ++id) {
            if (fc.corners[id] != 2) continue;
            auto [f, m] = fc.members[id][0];
            if (try_edge_contraction(c, f, static_cast<std::uint32_t>(m)))
                out.push_back(Move{kind, 0, f, static_cast<std::uint32_t>(m)});
        }
    }
    return out;
}

std::vector<Move> available_moves(const CellComplex& c) {
    std::vector<Move> out;
    for (int i = 0; i <= 4; ++i) {
        auto part = available_moves(c, Move::Kind::bistellar, i);
        out.insert(out.end(), part.begin(), part.end());
    }
    auto part = available_moves(c, Move::Kind::edge_contraction, 0);
    out.insert(out.end(), part.begin(), part.end());
    return out;
}

CellComplex apply(const CellComplex& c, const Move& m) {
    const int d = c.dim();
    if (d != 4) fail(errc::wrong_dimension, "moves are implemented in dimension 4");
    if (m.facet < 0 || m.facet >= c.facet_count()) fail(errc::illegal_move, "site facet gone");

    if (m.kind == Move::Kind::edge_contraction) {
        auto res = try_edge_contraction(c, m.facet, m.mask);
        if (!res) fail(errc::illegal_move, "edge contraction would damage the complex");
        return *res;
    }

    const int i = m.level;
    if (i < 0 || i > 4) fail(errc::illegal_move, "bad move level");

    FaceClasses fc = face_classes(c);
    VertexClasses vc = vertex_classes(c);

    StarPattern sp;
    if (i == 0) {
        if (m.mask != (1u << (d + 1)) - 1u) fail(errc::illegal_move, "0-move site is a facet");
        sp.level = 0;
        sp.facet_for = {m.facet};
        sp.mask_for = {(1u << (d + 1)) - 1u};
    } else {
        if (__builtin_popcount(m.mask) != d + 1 - i)
            fail(errc::illegal_move, "site mask has the wrong size");
        int cls = fc.id_of(m.facet, m.mask);
        auto pat = star_pattern(c, fc, vc, cls, i);
        if (!pat) fail(errc::illegal_move, "site is not a boundary-of-simplex star");
        sp = *pat;
    }

    const int ndelta = d - i + 1; // delta roles 0..d-i
    const int base = d - i;      // first gamma label in a new facet

    std::vector<char> in_star(c.facet_count(), 0);
    for (int f : sp.facet_for) in_star[f] = 1;
    std::vector<int> new_id(c.facet_count(), -1);
    int survivors = 0;
    for (int f = 0; f < c.facet_count(); ++f)
        if (!in_star[f]) new_id[f] = survivors++;

    // Label of each role inside old star facets.
    // Delta role r = r-th corner of the mask in the anchor facet order for
    // i == 0; by sorted vertex class otherwise. Gamma roles likewise.
    auto label_in_star = [&](int g, bool gamma_role, int id) {
        int f = sp.facet_for[g];
        if (i == 0) return id; // roles are the facet's own labels
        int cls = gamma_role ? sp.gamma_classes[id] : sp.delta_classes[id];
        return corner_with_class(c, vc, f, cls);
    };
    // Label of each role inside new facet N_x.
    auto label_in_new = [&](int x, bool gamma_role, int id) {
        if (gamma_role) return base + id;
        return id < x ? id : id - 1;
    };
    auto role_in_new = [&](int x, int label) {
        if (label >= base) return Role{true, label - base};
        return Role{false, label < x ? label : label + 1};
    };

    std::vector<std::array<Gluing, 5>> gl(survivors + ndelta);
    for (int f = 0; f < c.facet_count(); ++f) {
        if (in_star[f]) continue;
        for (int s = 0; s <= d; ++s) {
            const Gluing& g = c.gluing(f, s);
            if (!g.glued()) continue;
            if (in_star[g.facet]) continue; // rewired below
            gl[new_id[f]][s] = Gluing{new_id[g.facet], g.face, g.perm};
        }
    }

    // Internal gluings between new facets.
    for (int x = 0; x < ndelta; ++x)
        for (int y = x + 1; y < ndelta; ++y) {
            int sx = label_in_new(x, false, y);
            int sy = label_in_new(y, false, x);
            Perm p = identity_perm();
            for (int l = 0; l <= d; ++l) {
                Role r = role_in_new(x, l);
                int img = (!r.is_gamma && r.id == y) ? sy : label_in_new(y, r.is_gamma, r.id);
                p[l] = static_cast<std::uint8_t>(img);
            }
            int nx = survivors + x, ny = survivors + y;
            gl[nx][sx] = Gluing{ny, static_cast<std::int8_t>(sy), p};
            gl[ny][sy] = Gluing{nx, static_cast<std::int8_t>(sx), inverse_perm(p, d)};
        }

    // External faces: old (facet-for-g, opposite delta role x) becomes
    // (N_x, opposite gamma role g).
    const int ngamma = i + 1;
    for (int g = 0; g < ngamma; ++g) {
        int f = sp.facet_for[g];
        for (int x = 0; x < ndelta; ++x) {
            int old_slot = label_in_star(g, false, x);
            const Gluing& og = c.gluing(f, old_slot);
            int nx = survivors + x;
            int ns = label_in_new(x, true, g);
            if (!og.glued()) continue;
            // Matching corner classes across a gluing force distinct external
            // faces of the star to be in distinct classes, so the star
            // boundary can never be glued to itself in a valid complex.
            if (in_star[og.facet])
                fail(errc::illegal_move, "star boundary glued to itself");
            Perm p = identity_perm();
            for (int l = 0; l <= d; ++l) {
                Role r = role_in_new(x, l);
                if (r.is_gamma && r.id == g) {
                    p[l] = static_cast<std::uint8_t>(og.face);
                } else {
                    int src = label_in_star(g, r.is_gamma, r.id);
                    p[l] = og.perm[src];
                }
            }
            gl[nx][ns] = Gluing{new_id[og.facet], og.face, p};
            gl[new_id[og.facet]][og.face] =
                Gluing{nx, static_cast<std::int8_t>(ns), inverse_perm(p, d)};
        }
    }

    return CellComplex(d, std::move(gl));
}

} // namespace cryst
