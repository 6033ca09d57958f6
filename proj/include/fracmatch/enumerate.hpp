#pragma once

#include <cstdint>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

/// One representative per isomorphism class of connected simple graphs on n
/// vertices, in ascending canonical-key order. The in-process enumerator is
/// capped at n = 8; larger corpora are expected as graph6 files. Throws
/// UnsupportedSizeError outside 1..8.
std::vector<Graph> enumerate_connected(int n);

namespace detail {

/// Canonical keys of all connected graphs on k vertices for k = 1..n_max,
/// one vector per size (index 0 is size 1). Grows each level by attaching a
/// new vertex to every nonempty subset of a smaller representative, then
/// deduplicates by canonical key. Supports n_max up to 10.
std::vector<std::vector<std::uint64_t>> connected_rep_keys(int n_max);

}  // namespace detail

}  // namespace fracmatch
