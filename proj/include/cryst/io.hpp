#pragma once

#include <string>

#include "cryst/colored_graph.hpp"
#include "cryst/complex.hpp"

namespace cryst {

/// Line 1: `gem <colors> <n>`, then one line per color `c: a-b a-b ...`
/// with n/2 pairs. `#` starts a comment. Writing normalizes pair order.
ColoredGraph parse_gem(const std::string& text);
std::string write_gem(const ColoredGraph& g);

/// Line 1: `pst <dim> <facets>`, then one line per facet with dim+1 entries
/// `f:p` (p = image digits of 0..dim; digit at the slot index gives the
/// partner slot) or `-` for an unglued slot.
CellComplex parse_pst(const std::string& text);
std::string write_pst(const CellComplex& c);

/// Graphviz output, one styled edge per (pair, color); stable byte-for-byte.
std::string export_dot(const ColoredGraph& g);

ColoredGraph read_gem_file(const std::string& path);
CellComplex read_pst_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cryst
