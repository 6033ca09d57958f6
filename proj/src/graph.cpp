#include "fracmatch/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace fracmatch {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    edges_.insert(it, e);
    auto& au = adj_[static_cast<std::size_t>(u)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

ComponentProfile components(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("removed vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }

    ComponentProfile profile;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (gone[s] || seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (gone[w] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        if (comp.size() % 2 == 1) {
            ++profile.odd;
            if (comp.size() == 1)
                ++profile.isolated;
            else
                ++profile.odd_big;
        }
        profile.comps.push_back(std::move(comp));
    }
    return profile;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return components(g, {}).comps.size() == 1;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.vertex_count();
    Graph g(total);
    int offset = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
        offset += p.vertex_count();
    }
    return g;
}

namespace {

constexpr int kCanonMaxN = 11;  // 55 triangle bits, fits in a 64-bit key

struct CanonSearch {
    int n;
    std::array<std::uint16_t, kCanonMaxN> rows;
    std::array<int, kCanonMaxN> color;     // refinement color per vertex
    std::array<int, kCanonMaxN> pos_color; // required color per position
    std::array<int, kCanonMaxN> order;
    std::uint16_t used = 0;
    std::uint64_t best = ~0ULL;

    // Keys are packed MSB-first so lexicographic order on the bitstring
    // equals numeric order on the packed word.
    void dfs(int j, std::uint64_t cur, int bits) {
        if (j == n) {
            if (cur < best) best = cur;
            return;
        }
        const int off = bits;
        const int want = pos_color[j];
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (color[v] != want) continue;
            std::uint64_t next = cur;
            for (int i = 0; i < j; ++i)
                if ((rows[v] >> order[i]) & 1) next |= 1ULL << (63 - (off + i));
            const int len = bits + j;
            const std::uint64_t mask = len == 0 ? 0 : (~0ULL << (64 - len));
            if (next > (best & mask)) continue;
            used |= std::uint16_t(1) << v;
            order[j] = v;
            dfs(j + 1, next, len);
            used &= ~(std::uint16_t(1) << v);
        }
    }
};

// Iterated neighborhood refinement. Color values are dense ids ordered by
// an isomorphism-invariant signature, so position blocks line up across
// isomorphic graphs.
void refine_colors(int n, const std::array<std::uint16_t, kCanonMaxN>& rows,
                   std::array<int, kCanonMaxN>& color) {
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::popcount(static_cast<unsigned>(rows[v])));
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < n; ++v) {
            std::array<int, kCanonMaxN> nb{};
            int cnt = 0;
            for (int u = 0; u < n; ++u)
                if ((rows[v] >> u) & 1) nb[cnt++] = color[u];
            std::sort(nb.begin(), nb.begin() + cnt);
            std::uint64_t h = 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(color[v]);
            for (int i = 0; i < cnt; ++i) {
                h ^= static_cast<std::uint64_t>(nb[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                     (h >> 2);
            }
            sig[static_cast<std::size_t>(v)] = h;
        }
        std::vector<std::uint64_t> uniq(sig);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v) {
            auto it = std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]);
            color[v] = static_cast<int>(it - uniq.begin());
        }
        if (uniq.size() == static_cast<std::size_t>(n)) break;  // discrete partition
    }
}

}  // namespace

std::uint64_t detail::canonical_key_rows(const std::uint16_t* rows_in, int n) {
    if (n > kCanonMaxN)
        throw UnsupportedSizeError("canonical_key supports at most " +
                                   std::to_string(kCanonMaxN) + " vertices");
    CanonSearch s;
    s.n = n;
    for (int v = 0; v < n; ++v) s.rows[v] = rows_in[v];
    refine_colors(n, s.rows, s.color);

    std::array<int, kCanonMaxN> sorted_colors{};
    for (int v = 0; v < n; ++v) sorted_colors[v] = s.color[v];
    std::sort(sorted_colors.begin(), sorted_colors.begin() + n);
    for (int j = 0; j < n; ++j) s.pos_color[j] = sorted_colors[j];

    s.dfs(0, 0, 0);
    return s.best;
}

std::uint64_t canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCanonMaxN)
        throw UnsupportedSizeError("canonical_key supports at most " +
                                   std::to_string(kCanonMaxN) + " vertices");
    std::array<std::uint16_t, kCanonMaxN> rows{};
    for (auto [u, v] : g.edges()) {
        rows[u] |= std::uint16_t(1) << v;
        rows[v] |= std::uint16_t(1) << u;
    }
    return detail::canonical_key_rows(rows.data(), n);
}

Graph graph_from_key(std::uint64_t key, int n) {
    Graph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((key >> (63 - b)) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace fracmatch
