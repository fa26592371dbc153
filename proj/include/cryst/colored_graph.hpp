#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cryst/errors.hpp"

namespace cryst {

/// Subset of the colors {0..dim}, stored as a bitmask.
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

    static ColorSet all(int dim) { return ColorSet((1u << (dim + 1)) - 1u); }
    static ColorSet of(std::initializer_list<int> colors) {
        std::uint32_t b = 0;
        for (int c : colors) b |= (1u << c);
        return ColorSet(b);
    }

    std::uint32_t bits() const { return bits_; }
    bool contains(int c) const { return (bits_ >> c) & 1u; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }

    ColorSet with(int c) const { return ColorSet(bits_ | (1u << c)); }
    ColorSet without(int c) const { return ColorSet(bits_ & ~(1u << c)); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int c = 0; c < 32; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    bool operator==(const ColorSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// Complete isomorphism invariant of a connected colored graph
/// (invariant under vertex relabeling and color permutation).
struct CanonicalCode {
    std::vector<std::uint16_t> data;

    bool operator==(const CanonicalCode&) const = default;
    bool operator<(const CanonicalCode& o) const { return data < o.data; }

    std::string hex() const;
};

/// (d+1)-regular properly edge-colored loopless multigraph, one
/// fixed-point-free involution per color.
class ColoredGraph {
public:
    /// Validates that every per-color sequence is a fixed-point-free
    /// involution on 0..n-1 with n even.
    ColoredGraph(int dim, std::vector<std::vector<int>> matchings);

    int dim() const { return dim_; }
    int num_colors() const { return dim_ + 1; }
    int order() const { return order_; }

    /// Color-c neighbor of v.
    int neighbor(int c, int v) const { return matchings_[c][v]; }
    const std::vector<std::vector<int>>& matchings() const { return matchings_; }

    ColorSet colors() const { return ColorSet::all(dim_); }

    bool operator==(const ColoredGraph&) const = default;

private:
    int dim_;
    int order_;
    std::vector<std::vector<int>> matchings_;
};

/// Connected components of the residue keeping only colors in D.
/// Each component is sorted; components are ordered by smallest vertex.
std::vector<std::vector<int>> residue(const ColoredGraph& g, ColorSet d);

/// Number of components of the residue (the pair/triple counts g_D).
int g_count(const ColoredGraph& g, ColorSet d);

bool is_connected(const ColoredGraph& g);

/// True iff deleting any one color leaves the graph connected.
bool is_contracted(const ColoredGraph& g);

/// Two-class vertex partition (0/1 per vertex, component minima in class 0),
/// or nullopt if some cycle is odd.
std::optional<std::vector<int>> is_bipartite(const ColoredGraph& g);

/// Number of colors joining u and v.
int multiplicity(const ColoredGraph& g, int u, int v);

/// Lexicographically minimal BFS labeling trace over all start vertices and
/// color permutations. Equal codes iff isomorphic.
CanonicalCode canonical_code(const ColoredGraph& g);

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

/// Rebuild the graph with vertices renamed by `perm` (new id of v is perm[v]).
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);

/// Rebuild the graph with color c renamed sigma[c].
ColoredGraph recolor(const ColoredGraph& g, const std::vector<int>& sigma);

/// The 4-colored (or general) subgraph on a color subset, colors reindexed
/// ascending to 0..|D|-1. Vertex set is unchanged.
ColoredGraph residue_graph(const ColoredGraph& g, ColorSet d);

} // namespace cryst
