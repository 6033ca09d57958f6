#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracmatch/graph.hpp"
#include "fracmatch/matching.hpp"

namespace fracmatch {

/// Fractional matching with every weight in {0, 1/2, 1}, stored as integer
/// half-units {0, 1, 2} so all arithmetic stays exact. Construction enforces
/// a per-vertex incident load of at most 2 half-units.
class HalfIntegralMatching {
public:
    HalfIntegralMatching(const Graph& host, std::vector<std::uint8_t> weights);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::uint8_t>& weights() const { return weight_; }
    int weight(int index) const { return weight_[static_cast<std::size_t>(index)]; }

    /// Total weight in half-units, i.e. twice the fractional matching size.
    int size_halves() const;
    /// Incident weight at v in half-units.
    int load_halves(int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint8_t> weight_;
};

/// Statistics of a canonical optimal fractional matching: w0 unweighted
/// vertices, w1 full-weight edges, and c[i] half-weight odd cycles of length
/// 2i+1. Satisfies n = w0 + 2*w1 + sum (2i+1) c_i and
/// size_halves = 2*w1 + sum (2i+1) c_i.
struct CanonicalStats {
    int w0 = 0;
    int w1 = 0;
    std::map<int, int> c;

    int cycle_count() const;
    int size_halves() const;
    /// w1 + sum i*c_i, a lower bound for the matching number.
    int matching_lower_bound() const;
};

/// Partition of V into parts inducing K2 or an odd Hamiltonian subgraph;
/// exists iff the graph has a fractional perfect matching.
struct FpmPartition {
    std::vector<VertexSet> parts;
};

/// Bipartite double cover on 2n vertices: edge uv lifts to (u, n+v) and
/// (v, n+u). Its matching number equals twice the fractional matching number
/// of g.
Graph double_cover(const Graph& g);

/// 2 * alpha'_f(g), computed as the matching number of the double cover.
int alpha_f_halves(const Graph& g);

/// Optimal half-integral fractional matching folded from a maximum matching
/// of the double cover: weight(uv) = [u~(n+v) matched] + [v~(n+u) matched].
HalfIntegralMatching extract_half_integral(const Graph& g);

/// Rewrites an optimal half-integral matching to the canonical fixpoint:
/// half-weight edges form disjoint odd cycles, no host edge joins two
/// distinct half-cycles, and every neighbor of an unweighted vertex is an
/// endpoint of a full edge. Each rewrite strictly increases the full-edge
/// count, so at most n/2 are applied; the count is reported through
/// rewrite_count when non-null. Throws NonOptimalInputError when the input
/// exhibits a configuration impossible for an optimal matching (odd
/// half-weight path, or an unweighted vertex with a non-full neighbor at the
/// fixpoint).
HalfIntegralMatching canonicalize(const Graph& g, const HalfIntegralMatching& f,
                                  int* rewrite_count = nullptr);

/// Reads (w0, w1, c) off a canonical matching. Throws std::invalid_argument
/// when the half-weight edges do not form disjoint odd cycles.
CanonicalStats canonical_stats(const Graph& g, const HalfIntegralMatching& f);

/// Checks the canonical-fixpoint structure; on failure optionally reports
/// the first violated condition.
bool is_canonical(const Graph& g, const HalfIntegralMatching& f, std::string* why = nullptr);

/// Searches for a partition into K2 / odd-Hamiltonian parts, trying small
/// parts first. Returns nullopt when none exists. Capped at n = 12.
std::optional<FpmPartition> fpm_partition(const Graph& g);

constexpr int kFpmCap = 12;

}  // namespace fracmatch
