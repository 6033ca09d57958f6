#include "fracmatch/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace fracmatch {

namespace {

// Augmenting-path search with blossom contraction, following the usual
// base[]/parent[] contraction bookkeeping. O(V^3) overall.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {
        mate_.assign(n_, -1);
        parent_.assign(n_, -1);
        base_.assign(n_, 0);
    }

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0) continue;
            for (int u : g_.neighbors(v)) {
                if (mate_[u] < 0) {
                    mate_[v] = u;
                    mate_[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] < 0) augment_from(v);
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) const {
        std::vector<char> mark(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[a];
            mark[a] = 1;
            if (mate_[a] < 0) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int stem, int child, std::vector<char>& in_blossom) {
        while (base_[v] != stem) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        parent_.assign(n_, -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
                    // Odd cycle through the root subtree: contract the blossom.
                    int stem = lowest_common_base(v, to);
                    std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
                    mark_path(v, stem, to, in_blossom);
                    mark_path(to, stem, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom[base_[i]]) continue;
                        base_[i] = stem;
                        if (!used[i]) {
                            used[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (mate_[to] < 0) return to;  // augmenting path found
                    used[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_augmenting_path(root);
        if (v < 0) return;
        while (v >= 0) {
            int pv = parent_[v], next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
};

// Subset scan shared by both witness flavors. score picks o or i from a
// component census over bitmask rows.
template <typename Score>
DeficiencyWitness best_subset(const Graph& g, int cap, WitnessFlavor flavor, Score score) {
    const int n = g.vertex_count();
    if (cap > kMaxWitnessCap) cap = kMaxWitnessCap;
    if (n > cap)
        throw CapExceededError("subset witness search capped at n = " + std::to_string(cap) +
                               ", got " + std::to_string(n) +
                               "; use gallai_edmonds for larger graphs");

    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= std::uint32_t(1) << v;
        rows[v] |= std::uint32_t(1) << u;
    }
    const std::uint32_t full = n == 32 ? ~0u : ((std::uint32_t(1) << n) - 1);

    auto members_of = [](std::uint32_t mask) {
        VertexSet s;
        for (int v = 0; mask; ++v, mask >>= 1)
            if (mask & 1) s.push_back(v);
        return s;
    };

    DeficiencyWitness best;
    best.flavor = flavor;
    bool have = false;
    for (std::uint32_t s = 0; s <= full; ++s) {
        std::uint32_t rem = full & ~s;
        int odd = 0, iso = 0;
        while (rem) {
            std::uint32_t comp = rem & (~rem + 1);  // lowest remaining vertex
            for (;;) {
                std::uint32_t grow = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grow |= rows[v] & rem;
                }
                if (grow == comp) break;
                comp = grow;
            }
            int size = std::popcount(comp);
            if (size % 2 == 1) {
                ++odd;
                if (size == 1) ++iso;
            }
            rem &= ~comp;
        }
        int value = score(odd, iso) - std::popcount(s);
        int ssize = std::popcount(s);
        if (!have || value > best.value ||
            (value == best.value && ssize > static_cast<int>(best.members.size()))) {
            best.value = value;
            best.members = members_of(s);
            have = true;
        } else if (value == best.value && ssize == static_cast<int>(best.members.size())) {
            VertexSet cand = members_of(s);
            if (cand < best.members) best.members = std::move(cand);
        }
        if (s == full) break;  // avoid wrap when n == 32
    }
    return best;
}

}  // namespace

std::vector<int> max_matching_mates(const Graph& g) { return BlossomSolver(g).solve(); }

Matching max_matching(const Graph& g) {
    std::vector<int> mate = max_matching_mates(g);
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

DeficiencyWitness tutte_berge_witness(const Graph& g, int cap) {
    return best_subset(g, cap, WitnessFlavor::OddComponent,
                       [](int odd, int) { return odd; });
}

DeficiencyWitness frac_deficiency_witness(const Graph& g, int cap) {
    return best_subset(g, cap, WitnessFlavor::IsolatedVertex,
                       [](int, int iso) { return iso; });
}

GallaiEdmonds gallai_edmonds(const Graph& g) {
    const int n = g.vertex_count();
    const int alpha = max_matching(g).size();

    GallaiEdmonds out;
    std::vector<char> in_d(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        Graph h(n - 1);
        for (auto [a, b] : g.edges()) {
            if (a == v || b == v) continue;
            int a2 = a > v ? a - 1 : a;
            int b2 = b > v ? b - 1 : b;
            h.add_edge(a2, b2);
        }
        if (max_matching(h).size() == alpha) {
            in_d[v] = 1;
            out.d.push_back(v);
        }
    }
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (int v : out.d)
        for (int w : g.neighbors(v))
            if (!in_d[w]) in_a[w] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        if (in_a[v])
            out.a.push_back(v);
        else
            out.c.push_back(v);
    }
    return out;
}

}  // namespace fracmatch
