#include "cryst/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cryst {

namespace {

std::vector<int> standard_matching(int n) {
    std::vector<int> m(n);
    for (int v = 0; v < n; v += 2) {
        m[v] = v + 1;
        m[v + 1] = v;
    }
    return m;
}

// Union-find sized for incremental matching search: plain copies on descent.
struct Dsu {
    std::vector<int> p;
    int comps = 0;

    explicit Dsu(int n) : p(n), comps(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            p[std::max(a, b)] = std::min(a, b);
            --comps;
        }
    }
    static Dsu from_matching(const std::vector<int>& m) {
        Dsu d(static_cast<int>(m.size()));
        for (int v = 0; v < static_cast<int>(m.size()); ++v) d.unite(v, m[v]);
        return d;
    }
};

struct MatchingSearch {
    int n = 0;
    bool bipartite = false;      // only pair opposite parities
    int max_multiplicity = 2;    // existing edges of this pair across chosen colors
    std::vector<const std::vector<int>*> partners; // matchings to track components with
    std::vector<int> targets;                      // exact final component counts

    const std::vector<std::vector<int>>* chosen = nullptr; // for multiplicity counts

    template <typename Leaf>
    void run(Leaf&& leaf) const {
        std::vector<int> cur(n, -1);
        std::vector<Dsu> state;
        state.reserve(partners.size());
        for (auto* m : partners) state.push_back(Dsu::from_matching(*m));
        rec(cur, state, n / 2, leaf);
    }

private:
    int multiplicity_of(int u, int v) const {
        if (!chosen) return 0;
        int k = 0;
        for (const auto& m : *chosen)
            if (m[u] == v) ++k;
        return k;
    }

    template <typename Leaf>
    void rec(std::vector<int>& cur, const std::vector<Dsu>& state, int remaining,
             Leaf&& leaf) const {
        if (remaining == 0) {
            for (std::size_t k = 0; k < state.size(); ++k)
                if (state[k].comps != targets[k]) return;
            leaf(cur);
            return;
        }
        int u = 0;
        while (cur[u] >= 0) ++u;
        for (int v = u + 1; v < n; ++v) {
            if (cur[v] >= 0) continue;
            if (bipartite && (u % 2) == (v % 2)) continue;
            if (multiplicity_of(u, v) >= max_multiplicity) continue;
            std::vector<Dsu> next = state;
            bool ok = true;
            for (std::size_t k = 0; k < next.size() && ok; ++k) {
                next[k].unite(u, v);
                // Each later pair can merge at most one component per tracker.
                if (next[k].comps < targets[k] ||
                    next[k].comps - (remaining - 1) > targets[k])
                    ok = false;
            }
            if (ok) {
                cur[u] = v;
                cur[v] = u;
                rec(cur, next, remaining - 1, leaf);
                cur[u] = -1;
                cur[v] = -1;
            }
        }
    }
};

void guard(bool cond, const std::string& what) {
    if (!cond) fail(errc::too_large, what);
}

} // namespace

std::vector<Census3Entry> census_3manifold(int n, const CensusOptions& opts) {
    if (n < 2 || n % 2 != 0) fail(errc::odd_order, "vertex count must be even and positive");
    if (!opts.override_size_guard) guard(n <= 12, "census_3manifold beyond n=12 needs an override");

    std::vector<Census3Entry> out;
    if (n == 2) {
        std::vector<std::vector<int>> m(4, standard_matching(2));
        ColoredGraph g(3, m);
        out.push_back(Census3Entry{g, check_sphere3(g, opts.tietze_budget), 1, 1, 1});
        return out;
    }

    const int want_sum = 2 + n / 2;
    std::vector<int> m0 = standard_matching(n);
    std::map<CanonicalCode, ColoredGraph> found;

    // g01 and g02 are free; a triple edge would disconnect a 3-color residue,
    // so multiplicities stay below three throughout.
    std::vector<std::vector<int>> chosen01 = {m0};
    MatchingSearch free1;
    free1.n = n;
    free1.max_multiplicity = 2;
    free1.chosen = &chosen01;

    free1.run([&](const std::vector<int>& m1) {
        int g01;
        {
            Dsu d = Dsu::from_matching(m0);
            for (int v = 0; v < n; ++v) d.unite(v, m1[v]);
            g01 = d.comps;
        }
        std::vector<std::vector<int>> chosen012 = {m0, m1};
        MatchingSearch free2;
        free2.n = n;
        free2.max_multiplicity = 2;
        free2.chosen = &chosen012;
        free2.run([&](const std::vector<int>& m2) {
            int g02, g12;
            {
                Dsu d = Dsu::from_matching(m0);
                for (int v = 0; v < n; ++v) d.unite(v, m2[v]);
                g02 = d.comps;
            }
            {
                Dsu d = Dsu::from_matching(m1);
                for (int v = 0; v < n; ++v) d.unite(v, m2[v]);
                g12 = d.comps;
            }
            // g03 = g12 and the sum condition pin g12 now.
            if (g12 != want_sum - g01 - g02) return;
            std::vector<std::vector<int>> chosen_all = {m0, m1, m2};
            MatchingSearch s3;
            s3.n = n;
            s3.max_multiplicity = 2;
            s3.chosen = &chosen_all;
            s3.partners = {&m0, &m1, &m2};
            s3.targets = {g12, g02, g01}; // g03, g13, g23
            s3.run([&](const std::vector<int>& m3) {
                ColoredGraph g(3, {m0, m1, m2, m3});
                if (!is_contracted(g)) return;
                found.emplace(canonical_code(g), g);
            });
        });
    });

    for (const auto& [code, g] : found) {
        Census3Entry e{g, check_sphere3(g, opts.tietze_budget),
                       g_count(g, ColorSet::of({0, 1})), g_count(g, ColorSet::of({0, 2})),
                       g_count(g, ColorSet::of({0, 3}))};
        out.push_back(std::move(e));
    }
    return out;
}

Census4Result census_simple_4(int n, const CensusOptions& opts) {
    if (n < 2 || n % 2 != 0) fail(errc::odd_order, "vertex count must be even and positive");
    if ((n + 4) % 6 != 0)
        fail(errc::validation_failed, "no simple crystallization has " + std::to_string(n) +
                                          " vertices (n = 6m - 4)");
    if (!opts.override_size_guard)
        guard(n == 2 || n == 8 || n == 14, "census_simple_4 beyond n=14 needs an override");

    Census4Result result;
    const int m_target = (n + 4) / 6;

    if (n == 2) {
        std::vector<std::vector<int>> mats(5, standard_matching(2));
        result.classes.emplace_back(4, mats);
        return result;
    }

    std::vector<int> m0 = standard_matching(n);
    std::map<CanonicalCode, ColoredGraph> candidates;

    // Colors 1..3 complete a bipartite 4-colored sub-crystallization with all
    // pair counts equal to m; color 4 extends it. The standard matching plus
    // the even/odd bipartition is a complete normal form, so every class is
    // reached.
    std::vector<std::vector<int>> chosen1 = {m0};
    MatchingSearch s1;
    s1.n = n;
    s1.bipartite = true;
    s1.chosen = &chosen1;
    s1.partners = {&m0};
    s1.targets = {m_target};
    s1.run([&](const std::vector<int>& m1) {
        std::vector<std::vector<int>> chosen2 = {m0, m1};
        MatchingSearch s2;
        s2.n = n;
        s2.bipartite = true;
        s2.chosen = &chosen2;
        s2.partners = {&m0, &m1};
        s2.targets = {m_target, m_target};
        s2.run([&](const std::vector<int>& m2) {
            std::vector<std::vector<int>> chosen3 = {m0, m1, m2};
            MatchingSearch s3;
            s3.n = n;
            s3.bipartite = true;
            s3.chosen = &chosen3;
            s3.partners = {&m0, &m1, &m2};
            s3.targets = {m_target, m_target, m_target};
            s3.run([&](const std::vector<int>& m3) {
                ColoredGraph base(3, {m0, m1, m2, m3});
                for (int c = 0; c <= 3; ++c)
                    if (g_count(base, base.colors().without(c)) != 1) return;
                std::vector<std::vector<int>> chosen4 = {m0, m1, m2, m3};
                MatchingSearch s4;
                s4.n = n;
                s4.bipartite = true;
                s4.chosen = &chosen4;
                s4.partners = {&m0, &m1, &m2, &m3};
                s4.targets = {m_target, m_target, m_target, m_target};
                s4.run([&](const std::vector<int>& m4) {
                    ColoredGraph g(4, {m0, m1, m2, m3, m4});
                    for (int i = 0; i <= 3; ++i)
                        for (int j = i + 1; j <= 3; ++j)
                            if (g_count(g, ColorSet::of({i, j, 4})) != 1) return;
                    candidates.emplace(canonical_code(g), g);
                });
            });
        });
    });

    // Sphere certification is the expensive filter; it runs on the deduped
    // survivors only.
    for (const auto& [code, g] : candidates) {
        auto cert = check_4manifold_crystallization(g, opts.tietze_budget);
        if (!cert.all_residues_pass_criteria()) continue;
        switch (cert.weakest()) {
            case SphereStatus::sphere: result.classes.push_back(g); break;
            case SphereStatus::unknown: result.unknown.push_back(g); break;
            case SphereStatus::not_sphere: break;
        }
    }
    return result;
}

} // namespace cryst
