#include "cryst/surgery.hpp"

#include <algorithm>

namespace cryst {

ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2,
                           const std::vector<int>& sigma) {
    if (g1.dim() != g2.dim()) fail(errc::wrong_dimension, "summands must share the dimension");
    const int d = g1.dim();
    const int n1 = g1.order(), n2 = g2.order();
    if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= n2)
        fail(errc::out_of_range, "sum vertex out of range");
    if (&g1 == &g2 && v1 == v2) fail(errc::self_sum, "cannot sum a graph with itself at one vertex");
    if (static_cast<int>(sigma.size()) != d + 1)
        fail(errc::out_of_range, "sigma must permute the colors");
    {
        std::uint32_t seen = 0;
        for (int c : sigma) {
            if (c < 0 || c > d) fail(errc::out_of_range, "sigma must permute the colors");
            seen |= 1u << c;
        }
        if (seen != (1u << (d + 1)) - 1u) fail(errc::out_of_range, "sigma must permute the colors");
    }

    auto map1 = [v1](int w) { return w < v1 ? w : w - 1; };
    auto map2 = [v2, n1](int w) { return n1 - 1 + (w < v2 ? w : w - 1); };

    std::vector<std::vector<int>> m(d + 1, std::vector<int>(n1 + n2 - 2, -1));
    for (int j = 0; j <= d; ++j) {
        int cj = sigma[j]; // color of g1 that becomes color j
        for (int w = 0; w < n1; ++w) {
            if (w == v1) continue;
            int x = g1.neighbor(cj, w);
            if (x == v1) continue;
            m[j][map1(w)] = map1(x);
        }
        for (int w = 0; w < n2; ++w) {
            if (w == v2) continue;
            int x = g2.neighbor(j, w);
            if (x == v2) continue;
            m[j][map2(w)] = map2(x);
        }
        int a = map1(g1.neighbor(cj, v1));
        int b = map2(g2.neighbor(j, v2));
        if (a == b) fail(errc::loop_edge, "sum would create a loop");
        m[j][a] = b;
        m[j][b] = a;
    }
    return ColoredGraph(d, std::move(m));
}

ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2) {
    std::vector<int> sigma(g1.dim() + 1);
    for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] = static_cast<int>(k);
    return connected_sum(g1, v1, g2, v2, sigma);
}

namespace {

// 0/1 class per vertex, or an error for non-bipartite summands.
std::vector<int> classes_or_fail(const ColoredGraph& g, const std::string& name) {
    auto cls = is_bipartite(g);
    if (!cls) fail(errc::validation_failed, "summand " + name + " is not bipartite");
    return *cls;
}

int smallest_in_class(const std::vector<int>& cls, int want) {
    for (std::size_t v = 0; v < cls.size(); ++v)
        if (cls[v] == want) return static_cast<int>(v);
    fail(errc::validation_failed, "bipartition class is empty");
}

} // namespace

ColoredGraph iterated_sum(const std::vector<SumTerm>& terms,
                          const std::function<ColoredGraph(const std::string&)>& catalog) {
    long total = 0;
    for (const auto& t : terms) total += t.count;
    if (total == 0) fail(errc::empty_spec, "no summands");

    std::optional<ColoredGraph> acc;
    std::vector<int> acc_cls; // designated classes of the accumulator

    for (const auto& t : terms) {
        if (t.count < 0) fail(errc::out_of_range, "negative summand count");
        for (int k = 0; k < t.count; ++k) {
            ColoredGraph next = catalog(t.name);
            if (next.dim() != 4)
                fail(errc::wrong_dimension, "summand " + t.name + " is not 4-dimensional");
            std::vector<int> next_cls = classes_or_fail(next, t.name);
            if (t.reversed)
                for (int& c : next_cls) c = 1 - c;
            if (!acc) {
                acc = std::move(next);
                acc_cls = std::move(next_cls);
                continue;
            }
            int v1 = smallest_in_class(acc_cls, 0);
            int v2 = smallest_in_class(next_cls, 1);
            ColoredGraph sum = connected_sum(*acc, v1, next, v2);

            // Carry the designation through: anchor on a surviving vertex of
            // the accumulator and orient the fresh bipartition to match.
            std::vector<int> sum_cls = classes_or_fail(sum, "sum");
            int anchor = (v1 == 0) ? 1 : 0;
            int image = anchor < v1 ? anchor : anchor - 1;
            if (sum_cls[image] != acc_cls[anchor])
                for (int& c : sum_cls) c = 1 - c;
            acc = std::move(sum);
            acc_cls = std::move(sum_cls);
        }
    }
    return *acc;
}

} // namespace cryst
