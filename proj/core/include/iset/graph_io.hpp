#pragma once

#include <string>
#include <string_view>

#include "iset/graph.hpp"

namespace iset {

/// Parses the standard graph6 encoding (optionally prefixed by ">>graph6<<").
/// Throws ParseError with a byte offset on malformed input, CapacityError
/// when the encoded graph has more than 64 vertices.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: single-byte size header for n <= 62, the long
/// form for 63 and 64.
std::string emit_graph6(const Graph& g);

/// Plain edge-list format: first line "n m", then m lines "u v" with 0-based
/// vertex ids. '#' starts a comment; blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads either format: edge-list when the first data line is "n m", graph6
/// otherwise (graph6 payload bytes are never digits).
Graph parse_graph_auto(std::string_view text);

}  // namespace iset
