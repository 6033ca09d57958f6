#pragma once

#include <utility>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

/// Set of pairwise vertex-disjoint host edges.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // sorted (u,v) pairs, u < v
    int size() const { return static_cast<int>(edges.size()); }
};

enum class WitnessFlavor { OddComponent, IsolatedVertex };

/// Vertex set S together with its deficiency value:
///   odd-component flavor    value = o(G-S) - |S|
///   isolated-vertex flavor  value = i(G-S) - |S|
struct DeficiencyWitness {
    VertexSet members;
    int value = 0;
    WitnessFlavor flavor = WitnessFlavor::OddComponent;
};

struct GallaiEdmonds {
    VertexSet d;  // vertices missed by at least one maximum matching
    VertexSet a;  // neighbors of D outside D
    VertexSet c;  // everything else
};

constexpr int kDefaultWitnessCap = 16;
constexpr int kMaxWitnessCap = 20;

/// Maximum matching via augmenting-path search with blossom contraction,
/// seeded from a greedy maximal matching (vertices scanned in increasing
/// order); deterministic for a given graph.
Matching max_matching(const Graph& g);

/// Mate array form of max_matching: mate[v] = partner or -1.
std::vector<int> max_matching_mates(const Graph& g);

/// S maximizing o(G-S) - |S| over all 2^n subsets; ties broken toward larger
/// |S|, then lexicographically least member list. Throws CapExceededError
/// when n exceeds the cap.
DeficiencyWitness tutte_berge_witness(const Graph& g, int cap = kDefaultWitnessCap);

/// Same search for i(G-S) - |S|.
DeficiencyWitness frac_deficiency_witness(const Graph& g, int cap = kDefaultWitnessCap);

/// D/A/C structure decomposition. D is found by re-solving with each vertex
/// deleted: v is in D iff deleting it does not drop the matching number.
GallaiEdmonds gallai_edmonds(const Graph& g);

}  // namespace fracmatch
