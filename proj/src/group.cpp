#include "cryst/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cryst {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
    }
    return Word(w.begin() + a, w.begin() + b);
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

GroupPresentation pi1_presentation(const ColoredGraph& g, int i, int j) {
    if (i == j) fail(errc::same_color, "pi1_presentation needs two distinct colors");
    if (i < 0 || j < 0 || i > g.dim() || j > g.dim())
        fail(errc::out_of_range, "color out of range");

    ColorSet rest = g.colors().without(i).without(j);
    auto comps = residue(g, rest); // ordered by smallest vertex
    const int s = static_cast<int>(comps.size()) - 1;
    // Designated component: the last one. Its letters are deleted.
    std::vector<int> comp_of(g.order(), -1);
    for (int k = 0; k < static_cast<int>(comps.size()); ++k)
        for (int v : comps[k]) comp_of[v] = k;

    auto cycles = residue(g, ColorSet::of({i, j}));

    GroupPresentation pres;
    pres.num_generators = s;
    for (const auto& cyc : cycles) {
        // Walk the cycle from its smallest vertex, first edge colored i.
        int v1 = cyc[0];
        std::vector<int> walk;
        walk.push_back(v1);
        int cur = g.neighbor(i, v1);
        int next_color = j;
        while (cur != v1) {
            walk.push_back(cur);
            cur = g.neighbor(next_color, cur);
            next_color = (next_color == i) ? j : i;
        }
        // Letters for v2, v3, ..., v_{2l}, v1 with alternating signs, even
        // positions positive; occurrences of the designated component dropped.
        Word r;
        const int len = static_cast<int>(walk.size());
        for (int h = 2; h <= len + 1; ++h) {
            int v = (h <= len) ? walk[h - 1] : walk[0];
            int c = comp_of[v];
            if (c == s) continue;
            int sign = (h % 2 == 0) ? 1 : -1;
            r.push_back(sign * (c + 1));
        }
        pres.relators.push_back(free_reduce(std::move(r)));
    }

    // One relator is redundant for dim >= 3; the single relator is kept in
    // dimension two.
    if (g.dim() >= 3 && !pres.relators.empty()) pres.relators.pop_back();
    return pres;
}

namespace {

int count_occurrences(const Word& w, int gen) {
    int n = 0;
    for (int x : w)
        if (std::abs(x) == gen) ++n;
    return n;
}

// Replaces every occurrence of generator `gen` in `w` by `rep` (for +1
// exponent) or its inverse, then freely reduces.
Word substitute(const Word& w, int gen, const Word& rep) {
    Word out;
    Word rep_inv = inverse_word(rep);
    for (int x : w) {
        if (x == gen)
            out.insert(out.end(), rep.begin(), rep.end());
        else if (x == -gen)
            out.insert(out.end(), rep_inv.begin(), rep_inv.end());
        else
            out.push_back(x);
    }
    return free_reduce(std::move(out));
}

// Drops generator `gen` from the numbering (letters above shift down).
Word renumber_down(Word w, int gen) {
    for (int& x : w) {
        if (x > gen) --x;
        if (x < -gen) ++x;
    }
    return w;
}

} // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, long budget) {
    GroupPresentation pres = p;
    long used = 0;
    bool over_budget = false;
    auto spend = [&](long k = 1) {
        used += k;
        if (used > budget) over_budget = true;
        return !over_budget;
    };

    bool changed = true;
    while (changed && !over_budget) {
        changed = false;

        // Free + cyclic reduction, drop empty relators.
        for (auto& r : pres.relators) {
            Word red = cyclic_reduce(r);
            if (red != r) {
                r = std::move(red);
                changed = true;
                if (!spend()) break;
            }
        }
        if (over_budget) break;
        std::size_t before = pres.relators.size();
        std::erase_if(pres.relators, [](const Word& r) { return r.empty(); });
        if (pres.relators.size() != before) changed = true;

        // Generator elimination: some relator uses a generator exactly once.
        bool eliminated = false;
        std::vector<std::size_t> order(pres.relators.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pres.relators[a].size() < pres.relators[b].size();
        });
        for (std::size_t idx : order) {
            const Word& r = pres.relators[idx];
            for (std::size_t pos = 0; pos < r.size(); ++pos) {
                int gen = std::abs(r[pos]);
                if (count_occurrences(r, gen) != 1) continue;
                // Rotate so the relator reads gen^e w; then gen = w^{-e}.
                Word rot(r.begin() + pos, r.end());
                rot.insert(rot.end(), r.begin(), r.begin() + pos);
                int e = rot[0] > 0 ? 1 : -1;
                Word w(rot.begin() + 1, rot.end());
                Word rep = (e == 1) ? inverse_word(w) : w;
                GroupPresentation next;
                next.num_generators = pres.num_generators - 1;
                for (std::size_t k = 0; k < pres.relators.size(); ++k) {
                    if (k == idx) continue;
                    next.relators.push_back(
                        renumber_down(substitute(pres.relators[k], gen, rep), gen));
                }
                pres = std::move(next);
                eliminated = true;
                changed = true;
                spend();
                break;
            }
            if (eliminated || over_budget) break;
        }
        if (eliminated || over_budget) continue;

        // Length-reducing substitution: rewrite a long relator using more
        // than half of a shorter one. Smallest rewriter first.
        order.resize(pres.relators.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pres.relators[a].size() < pres.relators[b].size();
        });
        bool substituted = false;
        for (std::size_t ui = 0; ui < order.size() && !substituted; ++ui) {
            const Word u = pres.relators[order[ui]];
            const int ul = static_cast<int>(u.size());
            if (ul < 2) continue;
            // All rotations of u and u^{-1}, doubled for subword search.
            std::array<Word, 2> doubled = {u, inverse_word(u)};
            doubled[0].insert(doubled[0].end(), u.begin(), u.end());
            Word ui_inv = inverse_word(u);
            doubled[1].insert(doubled[1].end(), ui_inv.begin(), ui_inv.end());
            for (std::size_t vi = 0; vi < order.size() && !substituted; ++vi) {
                if (vi == ui) continue;
                Word& v = pres.relators[order[vi]];
                const int vl = static_cast<int>(v.size());
                int kmax = std::min(vl, ul);
                for (int k = kmax; 2 * k > ul && !substituted; --k) {
                    for (int start = 0; start + k <= vl && !substituted; ++start) {
                        for (const Word& dd : doubled) {
                            for (int rot = 0; rot < ul; ++rot) {
                                bool match = true;
                                for (int t = 0; t < k; ++t) {
                                    if (dd[rot + t] != v[start + t]) {
                                        match = false;
                                        break;
                                    }
                                }
                                if (!match) continue;
                                // rotation = p q with p the matched part;
                                // p q = 1 so p may be replaced by q^{-1}.
                                Word q(dd.begin() + rot + k, dd.begin() + rot + ul);
                                Word qinv = inverse_word(q);
                                Word nv(v.begin(), v.begin() + start);
                                nv.insert(nv.end(), qinv.begin(), qinv.end());
                                nv.insert(nv.end(), v.begin() + start + k, v.end());
                                v = free_reduce(std::move(nv));
                                substituted = true;
                                changed = true;
                                spend();
                                break;
                            }
                            if (substituted) break;
                        }
                    }
                }
            }
        }
    }

    TietzeResult res;
    res.presentation = std::move(pres);
    res.status = over_budget ? TietzeStatus::budget_exhausted : TietzeStatus::reduced;
    res.applications = used;
    return res;
}

SmithResult smith_normal_form(std::vector<std::vector<bigint>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;

    auto identity = [](int n) {
        std::vector<std::vector<bigint>> m(n, std::vector<bigint>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    };
    SmithResult res;
    res.u = identity(rows);
    res.v = identity(cols);

    auto row_op = [&](int dst, int src, const bigint& f) { // row dst -= f * row src
        for (int j = 0; j < cols; ++j) a[dst][j] -= f * a[src][j];
        for (int j = 0; j < rows; ++j) res.u[dst][j] -= f * res.u[src][j];
    };
    auto col_op = [&](int dst, int src, const bigint& f) {
        for (int i = 0; i < rows; ++i) a[i][dst] -= f * a[i][src];
        for (int i = 0; i < cols; ++i) res.v[i][dst] -= f * res.v[i][src];
    };
    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(res.v[r][i], res.v[r][j]);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < rows; ++j) res.u[i][j] = -res.u[i][j];
    };

    int k = 0;
    const int limit = std::min(rows, cols);
    while (k < limit) {
        // Pivot: minimal nonzero absolute value in the trailing block.
        int pi = -1, pj = -1;
        bigint best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                bigint m = abs(a[i][j]);
                if (pi < 0 || m < best) {
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != k) swap_rows(pi, k);
        if (pj != k) swap_cols(pj, k);
        if (a[k][k] < 0) negate_row(k);

        bool clean = true;
        for (int i = k + 1; i < rows; ++i) {
            if (a[i][k] == 0) continue;
            bigint q = a[i][k] / a[k][k];
            row_op(i, k, q);
            if (a[i][k] != 0) clean = false;
        }
        for (int j = k + 1; j < cols; ++j) {
            if (a[k][j] == 0) continue;
            bigint q = a[k][j] / a[k][k];
            col_op(j, k, q);
            if (a[k][j] != 0) clean = false;
        }
        if (!clean) continue; // remainders became new, smaller pivot candidates

        // Divisibility: fold any non-multiple into column k and redo.
        bool divisible = true;
        for (int i = k + 1; i < rows && divisible; ++i)
            for (int j = k + 1; j < cols; ++j)
                if (a[i][j] % a[k][k] != 0) {
                    row_op(k, i, bigint(-1)); // adds row i to row k
                    divisible = false;
                    break;
                }
        if (!divisible) continue;
        ++k;
    }

    res.diagonal.assign(limit, 0);
    for (int i = 0; i < limit; ++i) res.diagonal[i] = a[i][i];
    return res;
}

Abelianization abelianize(const GroupPresentation& p) {
    const int s = p.num_generators;
    const int t = static_cast<int>(p.relators.size());
    Abelianization ab;
    if (s == 0) return ab;
    if (t == 0) {
        ab.free_rank = s;
        return ab;
    }
    std::vector<std::vector<bigint>> a(s, std::vector<bigint>(t, 0));
    for (int r = 0; r < t; ++r)
        for (int x : p.relators[r]) {
            int gen = std::abs(x) - 1;
            a[gen][r] += (x > 0) ? 1 : -1;
        }
    auto snf = smith_normal_form(std::move(a));
    int nonzero = 0;
    for (const bigint& d : snf.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) ab.torsion.push_back(d);
    }
    ab.free_rank = s - nonzero;
    return ab;
}

namespace {

int rank_mod_p(std::vector<std::vector<int>> a, int p) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (auto& row : a)
        for (int& x : row) x = ((x % p) + p) % p;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // Normalize the pivot to 1 (p is prime).
        int inv = 1;
        for (int k = 1; k < p; ++k)
            if (a[rank][col] * k % p == 1) inv = k;
        for (int& x : a[rank]) x = x * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            int f = a[r][col];
            for (int cc = 0; cc < cols; ++cc) a[r][cc] = ((a[r][cc] - f * a[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

bool h1_trivial(const GroupPresentation& p) {
    const int s = p.num_generators;
    if (s == 0) return true;
    const int t = static_cast<int>(p.relators.size());
    if (t < s) return false; // rank cannot reach s
    std::vector<std::vector<int>> a(s, std::vector<int>(t, 0));
    for (int r = 0; r < t; ++r)
        for (int x : p.relators[r]) a[std::abs(x) - 1][r] += (x > 0) ? 1 : -1;
    if (rank_mod_p(a, 2) < s) return false;
    if (rank_mod_p(a, 3) < s) return false;
    return abelianize(p).trivial();
}

std::string Abelianization::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const bigint& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

std::string to_string(const GroupPresentation& p) {
    std::ostringstream os;
    os << "<";
    for (int g = 1; g <= p.num_generators; ++g) {
        if (g > 1) os << ",";
        os << "x" << g;
    }
    os << " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        os << (r ? ", " : " ");
        if (p.relators[r].empty()) os << "1";
        for (std::size_t k = 0; k < p.relators[r].size(); ++k) {
            int x = p.relators[r][k];
            if (k) os << " ";
            os << "x" << std::abs(x);
            if (x < 0) os << "^-1";
        }
    }
    os << ">";
    return os.str();
}

} // namespace cryst
