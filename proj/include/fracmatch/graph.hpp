#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fracmatch/errors.hpp"

namespace fracmatch {

/// Subset of a host graph's vertices, kept sorted ascending without duplicates.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted
/// (u,v) pairs with u < v, the edge list sorted lexicographically, and
/// adjacency lists sorted ascending. Immutable iteration order makes every
/// downstream computation reproducible.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Adds edge {u,v}. Throws std::invalid_argument on loops, out-of-range
    /// endpoints, or duplicate edges.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Index of {u,v} in edges(), or -1 if absent.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Component census of g - removed.
struct ComponentProfile {
    int odd = 0;       // components with an odd number of vertices
    int isolated = 0;  // single-vertex components
    int odd_big = 0;   // odd components with >= 3 vertices
    std::vector<VertexSet> comps;  // each sorted; ordered by smallest member
};

/// Connected components of g with the vertices in `removed` deleted.
/// Guarantees odd == isolated + odd_big and that comps partitions
/// V(g) - removed.
ComponentProfile components(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);

/// Disjoint union; vertex blocks are laid out in argument order.
Graph disjoint_union(const std::vector<Graph>& parts);

/// Canonical labeling key for graphs on at most 11 vertices: the
/// lexicographically least upper-triangle adjacency bitstring over all
/// relabelings (restricted to refinement-compatible ones). Two graphs are
/// isomorphic iff their keys and vertex counts agree.
std::uint64_t canonical_key(const Graph& g);

/// Rebuilds the canonically labeled graph from its key.
Graph graph_from_key(std::uint64_t key, int n);

namespace detail {
/// canonical_key over adjacency bitmask rows; hot path for the enumerator.
std::uint64_t canonical_key_rows(const std::uint16_t* rows, int n);
}  // namespace detail

}  // namespace fracmatch
