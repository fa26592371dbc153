#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryst/complex.hpp"

namespace cryst {

/// A bistellar i-move site is the face class of delta, the common
/// (dim-i)-face, anchored by one (facet, corner-mask) incidence. An edge
/// contraction site is an edge incidence the same way.
struct Move {
    enum class Kind { bistellar, edge_contraction };
    Kind kind = Kind::bistellar;
    int level = 0; // i for bistellar moves
    int facet = 0;
    std::uint32_t mask = 0;

    bool operator==(const Move&) const = default;
    std::string to_string() const;
};

std::optional<Move> parse_move(const std::string& text);

/// Facet-count change of a bistellar i-move in dimension 4.
int facet_delta(const Move& m);

/// All legal moves: one 0-move per facet, pattern-checked i-move sites at
/// (4-i)-faces, and edge contractions that survive a trial application.
std::vector<Move> available_moves(const CellComplex& c);
std::vector<Move> available_moves(const CellComplex& c, Move::Kind kind, int level);

/// Applies a legal move, returning a fresh complex. Throws IllegalMove with
/// the violated precondition otherwise.
CellComplex apply(const CellComplex& c, const Move& m);

/// Trial edge contraction: nullopt when the quotient stops being a closed
/// manifold complex (vertex identifications and link damage included).
std::optional<CellComplex> try_edge_contraction(const CellComplex& c, int facet,
                                                std::uint32_t edge_mask);

} // namespace cryst
