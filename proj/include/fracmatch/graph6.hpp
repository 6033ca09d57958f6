#pragma once

#include <string>
#include <string_view>

#include "fracmatch/graph.hpp"

namespace fracmatch {

/// Decodes one graph6 line. Tolerates an optional ">>graph6<<" header and
/// trailing CR/LF. Accepts the one-byte size form (n <= 62) and the
/// three-byte form up to n = 2000. Throws ParseError with the offending
/// byte offset on malformed input.
Graph parse_graph6(std::string_view line);

/// Encodes a graph in the one-byte size form. Throws UnsupportedSizeError
/// for n > 62.
std::string encode_graph6(const Graph& g);

}  // namespace fracmatch
