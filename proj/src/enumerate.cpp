#include "fracmatch/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

namespace fracmatch {

namespace {

constexpr int kEnumeratorCap = 8;
constexpr int kDetailCap = 10;

// Unpacks an MSB-first canonical key into adjacency bitmask rows.
void key_to_rows(std::uint64_t key, int n, std::array<std::uint16_t, 16>& rows) {
    rows.fill(0);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((key >> (63 - b)) & 1) {
                rows[i] |= std::uint16_t(1) << j;
                rows[j] |= std::uint16_t(1) << i;
            }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> detail::connected_rep_keys(int n_max) {
    if (n_max < 1 || n_max > kDetailCap)
        throw UnsupportedSizeError("connected_rep_keys supports 1.." + std::to_string(kDetailCap));

    std::vector<std::vector<std::uint64_t>> levels;
    levels.push_back({0});  // K1
    for (int k = 2; k <= n_max; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::array<std::uint16_t, 16> rows{};
        // Every connected graph on k vertices arises from a connected graph
        // on k-1 vertices (delete a non-cut vertex, e.g. a spanning-tree
        // leaf) by attaching the new vertex to a nonempty neighborhood.
        for (std::uint64_t parent : levels[static_cast<std::size_t>(k - 2)]) {
            key_to_rows(parent, k - 1, rows);
            const std::uint16_t top = std::uint16_t(1) << (k - 1);
            for (std::uint16_t mask = 1; mask < (std::uint16_t(1) << (k - 1)); ++mask) {
                std::array<std::uint16_t, 16> child = rows;
                child[k - 1] = mask;
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) child[v] |= top;
                seen.insert(canonical_key_rows(child.data(), k));
            }
        }
        std::vector<std::uint64_t> reps(seen.begin(), seen.end());
        std::sort(reps.begin(), reps.end());
        levels.push_back(std::move(reps));
    }
    return levels;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kEnumeratorCap)
        throw UnsupportedSizeError(
            "enumerate_connected supports 1.." + std::to_string(kEnumeratorCap) +
            " vertices; ingest larger corpora from graph6 files");
    auto levels = detail::connected_rep_keys(n);
    std::vector<Graph> out;
    out.reserve(levels.back().size());
    for (std::uint64_t key : levels.back()) out.push_back(graph_from_key(key, n));
    return out;
}

}  // namespace fracmatch
