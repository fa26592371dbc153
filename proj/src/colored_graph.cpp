#include "cryst/colored_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cryst {

const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::not_involution: return "NotInvolution";
        case errc::color_count_mismatch: return "ColorCountMismatch";
        case errc::disconnected: return "Disconnected";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::not_contracted: return "NotContracted";
        case errc::out_of_range: return "OutOfRange";
        case errc::same_color: return "SameColor";
        case errc::self_sum: return "SelfSum";
        case errc::empty_spec: return "EmptySpec";
        case errc::too_large: return "TooLarge";
        case errc::odd_order: return "NOdd";
        case errc::missing_data: return "MissingData";
        case errc::validation_failed: return "ValidationFailed";
        case errc::parse_error: return "ParseError";
        case errc::illegal_move: return "IllegalMove";
        case errc::invalid_config: return "InvalidConfig";
    }
    return "Error";
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 4);
    for (std::uint16_t w : data) {
        out.push_back(digits[(w >> 12) & 0xf]);
        out.push_back(digits[(w >> 8) & 0xf]);
        out.push_back(digits[(w >> 4) & 0xf]);
        out.push_back(digits[w & 0xf]);
    }
    return out;
}

ColoredGraph::ColoredGraph(int dim, std::vector<std::vector<int>> matchings)
    : dim_(dim), matchings_(std::move(matchings)) {
    if (dim_ < 1) fail(errc::out_of_range, "dim must be >= 1");
    if (static_cast<int>(matchings_.size()) != dim_ + 1)
        fail(errc::color_count_mismatch,
             "expected " + std::to_string(dim_ + 1) + " matchings, got " +
                 std::to_string(matchings_.size()));
    order_ = static_cast<int>(matchings_[0].size());
    if (order_ < 2 || order_ % 2 != 0)
        fail(errc::odd_order, "order must be even and >= 2, got " + std::to_string(order_));
    if (order_ > 0xfffe) fail(errc::too_large, "order exceeds code width");
    for (int c = 0; c <= dim_; ++c) {
        const auto& m = matchings_[c];
        if (static_cast<int>(m.size()) != order_)
            fail(errc::color_count_mismatch, "matching " + std::to_string(c) + " has wrong length");
        for (int v = 0; v < order_; ++v) {
            if (m[v] < 0 || m[v] >= order_)
                fail(errc::out_of_range, "vertex " + std::to_string(m[v]) + " out of range");
            if (m[v] == v)
                fail(errc::loop_edge,
                     "vertex " + std::to_string(v) + ", color " + std::to_string(c));
            if (m[m[v]] != v)
                fail(errc::not_involution,
                     "vertex " + std::to_string(v) + ", color " + std::to_string(c));
        }
    }
}

std::vector<std::vector<int>> residue(const ColoredGraph& g, ColorSet d) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    const auto colors = d.to_vector();
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int c : colors) {
                int w = g.neighbor(c, v);
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

int g_count(const ColoredGraph& g, ColorSet d) {
    const int n = g.order();
    if (d.empty()) return n;
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    const auto colors = d.to_vector();
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        ++count;
        comp[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c : colors) {
                int w = g.neighbor(c, v);
                if (comp[w] < 0) {
                    comp[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

bool is_connected(const ColoredGraph& g) { return g_count(g, g.colors()) == 1; }

bool is_contracted(const ColoredGraph& g) {
    if (!is_connected(g)) return false;
    for (int c = 0; c <= g.dim(); ++c)
        if (g_count(g, g.colors().without(c)) != 1) return false;
    return true;
}

std::optional<std::vector<int>> is_bipartite(const ColoredGraph& g) {
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (cls[s] >= 0) continue;
        cls[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c = 0; c <= g.dim(); ++c) {
                int w = g.neighbor(c, v);
                if (cls[w] < 0) {
                    cls[w] = 1 - cls[v];
                    stack.push_back(w);
                } else if (cls[w] == cls[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return cls;
}

int multiplicity(const ColoredGraph& g, int u, int v) {
    if (u == v) fail(errc::out_of_range, "multiplicity requires distinct vertices");
    int count = 0;
    for (int c = 0; c <= g.dim(); ++c)
        if (g.neighbor(c, u) == v) ++count;
    return count;
}

namespace {

// BFS labeling trace for one (start, color order). Labels are handed out in
// discovery order; the trace records, for vertices in label order and colors
// in sigma order, the label of the neighbor. Returns false as soon as the
// trace exceeds `best` lexicographically (prune).
bool bfs_trace(const ColoredGraph& g, int start, const std::vector<int>& sigma,
               std::vector<std::uint16_t>& trace, const std::vector<std::uint16_t>* best) {
    const int n = g.order();
    const int h = g.num_colors();
    std::vector<int> label(n, -1);
    std::vector<int> order(n, -1);
    label[start] = 0;
    order[0] = start;
    int assigned = 1;
    trace.clear();
    std::size_t pos = 0;
    for (int lv = 0; lv < n; ++lv) {
        int v = order[lv];
        if (v < 0) return true; // disconnected; caller pre-checks connectivity
        for (int k = 0; k < h; ++k) {
            int w = g.neighbor(sigma[k], v);
            if (label[w] < 0) {
                label[w] = assigned;
                order[assigned] = w;
                ++assigned;
            }
            std::uint16_t entry = static_cast<std::uint16_t>(label[w]);
            if (best) {
                std::uint16_t b = (*best)[pos];
                if (entry > b) return false;
                if (entry < b) best = nullptr; // strictly smaller from here on
            }
            trace.push_back(entry);
            ++pos;
        }
    }
    return true;
}

} // namespace

CanonicalCode canonical_code(const ColoredGraph& g) {
    if (!is_connected(g)) fail(errc::disconnected, "canonical_code needs a connected graph");
    const int n = g.order();
    const int h = g.num_colors();

    std::vector<int> sigma(h);
    std::iota(sigma.begin(), sigma.end(), 0);

    std::vector<std::uint16_t> best;
    std::vector<std::uint16_t> trace;
    trace.reserve(static_cast<std::size_t>(n) * h);
    bool have_best = false;
    do {
        for (int start = 0; start < n; ++start) {
            if (!bfs_trace(g, start, sigma, trace, have_best ? &best : nullptr)) continue;
            if (!have_best || trace < best) {
                best = trace;
                have_best = true;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    CanonicalCode code;
    code.data.reserve(best.size() + 2);
    code.data.push_back(static_cast<std::uint16_t>(g.dim()));
    code.data.push_back(static_cast<std::uint16_t>(n));
    code.data.insert(code.data.end(), best.begin(), best.end());
    return code;
}

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.dim() != h.dim() || g.order() != h.order()) return false;
    return canonical_code(g) == canonical_code(h);
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) fail(errc::out_of_range, "relabel: bad permutation");
    std::vector<std::vector<int>> m(g.num_colors(), std::vector<int>(n));
    for (int c = 0; c <= g.dim(); ++c)
        for (int v = 0; v < n; ++v) m[c][perm[v]] = perm[g.neighbor(c, v)];
    return ColoredGraph(g.dim(), std::move(m));
}

ColoredGraph recolor(const ColoredGraph& g, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != g.num_colors())
        fail(errc::out_of_range, "recolor: bad permutation");
    std::vector<std::vector<int>> m(g.num_colors());
    for (int c = 0; c <= g.dim(); ++c) m[sigma[c]] = g.matchings()[c];
    return ColoredGraph(g.dim(), std::move(m));
}

ColoredGraph residue_graph(const ColoredGraph& g, ColorSet d) {
    if (d.size() < 2) fail(errc::out_of_range, "residue_graph needs >= 2 colors");
    std::vector<std::vector<int>> m;
    for (int c : d.to_vector()) m.push_back(g.matchings()[c]);
    return ColoredGraph(d.size() - 1, std::move(m));
}

} // namespace cryst
