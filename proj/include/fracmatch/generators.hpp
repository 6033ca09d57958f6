#pragma once

#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

/// Hub vertex 0 joined to a pendant vertex 1 and to the first vertex of each
/// of k disjoint triangles. Removing vertex 0 leaves exactly k triangles and
/// one isolated vertex; n = 3k + 2.
Graph gen_triangle_star(int k);

/// The two 5-vertex equality witnesses: C5, and K2 + K3 joined by one bridge.
std::vector<Graph> gen_equality_small();

/// k disjoint triangles; n = 3k.
Graph gen_disjoint_triangles(int k);

/// Cycle on n >= 3 vertices.
Graph gen_cycle(int n);

/// Path on n >= 1 vertices.
Graph gen_path(int n);

/// Complete graph on n >= 0 vertices.
Graph gen_complete(int n);

/// Star with one center and `leaves` leaves.
Graph gen_star(int leaves);

}  // namespace fracmatch
