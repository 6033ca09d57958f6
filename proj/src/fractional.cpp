#include "fracmatch/fractional.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fracmatch {

HalfIntegralMatching::HalfIntegralMatching(const Graph& host, std::vector<std::uint8_t> weights)
    : n_(host.vertex_count()), edges_(host.edges()), weight_(std::move(weights)) {
    if (weight_.size() != edges_.size())
        throw std::invalid_argument("weight vector does not match host edge count");
    std::vector<int> load(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (weight_[i] > 2)
            throw std::invalid_argument("edge weight above 2 half-units");
        load[static_cast<std::size_t>(edges_[i].first)] += weight_[i];
        load[static_cast<std::size_t>(edges_[i].second)] += weight_[i];
    }
    for (int v = 0; v < n_; ++v)
        if (load[static_cast<std::size_t>(v)] > 2)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " carries more than 2 half-units");
}

int HalfIntegralMatching::size_halves() const {
    return std::accumulate(weight_.begin(), weight_.end(), 0);
}

int HalfIntegralMatching::load_halves(int v) const {
    int load = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].first == v || edges_[i].second == v) load += weight_[i];
    return load;
}

int CanonicalStats::cycle_count() const {
    int total = 0;
    for (auto [i, count] : c) total += count;
    return total;
}

int CanonicalStats::size_halves() const {
    int total = 2 * w1;
    for (auto [i, count] : c) total += (2 * i + 1) * count;
    return total;
}

int CanonicalStats::matching_lower_bound() const {
    int total = w1;
    for (auto [i, count] : c) total += i * count;
    return total;
}

Graph double_cover(const Graph& g) {
    const int n = g.vertex_count();
    Graph cover(2 * n);
    for (auto [u, v] : g.edges()) {
        cover.add_edge(u, n + v);
        cover.add_edge(v, n + u);
    }
    return cover;
}

int alpha_f_halves(const Graph& g) { return max_matching(double_cover(g)).size(); }

HalfIntegralMatching extract_half_integral(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> mate = max_matching_mates(double_cover(g));
    std::vector<std::uint8_t> w;
    w.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        std::uint8_t halves = 0;
        if (mate[static_cast<std::size_t>(u)] == n + v) ++halves;
        if (mate[static_cast<std::size_t>(v)] == n + u) ++halves;
        w.push_back(halves);
    }
    return HalfIntegralMatching(g, std::move(w));
}

namespace {

// Connected piece of the half-weight subgraph: an open path or a cycle,
// with vertices listed in walk order.
struct HalfPiece {
    std::vector<int> verts;
    bool is_cycle = false;
    int lowest = 0;
    int edge_count() const {
        return static_cast<int>(verts.size()) - (is_cycle ? 0 : 1);
    }
};

struct HalfStructure {
    std::vector<std::vector<int>> half_nbrs;  // within half-weight subgraph
    std::vector<HalfPiece> pieces;            // ordered by lowest vertex
    std::vector<int> piece_of;                // vertex -> piece index or -1
};

HalfStructure half_structure(const Graph& g, const std::vector<std::uint8_t>& w) {
    const int n = g.vertex_count();
    HalfStructure hs;
    hs.half_nbrs.assign(static_cast<std::size_t>(n), {});
    hs.piece_of.assign(static_cast<std::size_t>(n), -1);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (w[i] != 1) continue;
        hs.half_nbrs[static_cast<std::size_t>(edges[i].first)].push_back(edges[i].second);
        hs.half_nbrs[static_cast<std::size_t>(edges[i].second)].push_back(edges[i].first);
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    auto walk = [&](int start, int forbidden) {
        // Follows the degree-<=2 half subgraph from start, never stepping
        // back onto the previous vertex.
        std::vector<int> path{start};
        seen[static_cast<std::size_t>(start)] = 1;
        int prev = forbidden, cur = start;
        for (;;) {
            int next = -1;
            for (int u : hs.half_nbrs[static_cast<std::size_t>(cur)])
                if (u != prev) {
                    next = u;
                    break;
                }
            if (next < 0 || seen[static_cast<std::size_t>(next)]) return std::pair(path, next);
            seen[static_cast<std::size_t>(next)] = 1;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
    };

    for (int v = 0; v < n; ++v) {
        if (seen[v] || hs.half_nbrs[static_cast<std::size_t>(v)].empty()) continue;
        HalfPiece piece;
        if (hs.half_nbrs[static_cast<std::size_t>(v)].size() == 1) {
            // v is a path endpoint; scan finds the lowest-numbered endpoint of
            // each path first only if we always walk fully, so walk both ways.
            auto [path, closure] = walk(v, -1);
            (void)closure;
            piece.verts = std::move(path);
            piece.is_cycle = false;
        } else {
            auto [path, closure] = walk(v, -1);
            if (closure == v) {
                piece.verts = std::move(path);
                piece.is_cycle = true;
            } else {
                // v was an interior path vertex: extend the walk the other way.
                std::vector<int> back;
                int prev = path.size() > 1 ? path[1] : -1;
                auto [other, c2] = walk(*std::find_if(
                                            hs.half_nbrs[static_cast<std::size_t>(v)].begin(),
                                            hs.half_nbrs[static_cast<std::size_t>(v)].end(),
                                            [&](int u) { return u != prev; }),
                                        v);
                (void)c2;
                back = std::move(other);
                std::reverse(back.begin(), back.end());
                back.insert(back.end(), path.begin(), path.end());
                piece.verts = std::move(back);
                piece.is_cycle = false;
            }
        }
        piece.lowest = *std::min_element(piece.verts.begin(), piece.verts.end());
        hs.pieces.push_back(std::move(piece));
    }
    std::sort(hs.pieces.begin(), hs.pieces.end(),
              [](const HalfPiece& a, const HalfPiece& b) { return a.lowest < b.lowest; });
    for (std::size_t p = 0; p < hs.pieces.size(); ++p)
        for (int v : hs.pieces[p].verts) hs.piece_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    return hs;
}

void set_weight(const Graph& g, std::vector<std::uint8_t>& w, int u, int v, std::uint8_t val) {
    int idx = g.edge_index(u, v);
    assert(idx >= 0);
    w[static_cast<std::size_t>(idx)] = val;
}

// Alternates 2,0,2,... along consecutive vertices. With an odd number of
// edges both end edges receive weight 2.
void alternate_from_front(const Graph& g, std::vector<std::uint8_t>& w,
                          const std::vector<int>& verts) {
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        set_weight(g, w, verts[i], verts[i + 1], i % 2 == 0 ? 2 : 0);
}

std::vector<int> loads(const Graph& g, const std::vector<std::uint8_t>& w) {
    std::vector<int> load(static_cast<std::size_t>(g.vertex_count()), 0);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        load[static_cast<std::size_t>(edges[i].first)] += w[i];
        load[static_cast<std::size_t>(edges[i].second)] += w[i];
    }
    return load;
}

// Orients a path so it starts at its lower-numbered endpoint, and a cycle so
// it starts at its lowest vertex heading toward that vertex's smaller
// half-neighbor; keeps rewrites independent of discovery order.
std::vector<int> oriented(const HalfPiece& piece) {
    std::vector<int> vs = piece.verts;
    if (!piece.is_cycle) {
        if (vs.front() > vs.back()) std::reverse(vs.begin(), vs.end());
        return vs;
    }
    auto it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), it, vs.end());
    if (vs.size() > 2 && vs[1] > vs.back()) {
        std::reverse(vs.begin() + 1, vs.end());
    }
    return vs;
}

}  // namespace

HalfIntegralMatching canonicalize(const Graph& g, const HalfIntegralMatching& f,
                                  int* rewrite_count) {
    if (f.edges() != g.edges() || f.vertex_count() != g.vertex_count())
        throw std::invalid_argument("matching does not belong to this graph");
    std::vector<std::uint8_t> w = f.weights();
    const int before = f.size_halves();
    int rewrites = 0;

    for (;;) {
        HalfStructure hs = half_structure(g, w);

        // R1: flatten a half-weight path into alternating full edges. An odd
        // edge count would allow a strictly larger matching, so the input
        // cannot have been optimal.
        const HalfPiece* todo = nullptr;
        for (const HalfPiece& piece : hs.pieces)
            if (!piece.is_cycle) {
                todo = &piece;
                break;
            }
        if (todo) {
            if (todo->edge_count() % 2 == 1)
                throw NonOptimalInputError(
                    "half-weight path with an odd number of edges; input matching is not optimal");
            std::vector<int> vs = oriented(*todo);
            alternate_from_front(g, w, vs);
            ++rewrites;
            continue;
        }

        // R2: flatten an even half-weight cycle the same way.
        todo = nullptr;
        for (const HalfPiece& piece : hs.pieces)
            if (piece.is_cycle && piece.edge_count() % 2 == 0) {
                todo = &piece;
                break;
            }
        if (todo) {
            std::vector<int> vs = oriented(*todo);
            vs.push_back(vs.front());
            alternate_from_front(g, w, vs);
            ++rewrites;
            continue;
        }

        // R3: a zero-weight edge joining two distinct odd half-cycles becomes
        // a full edge; both cycles lose their weight at the joined vertex and
        // re-alternate along the remaining even-vertex path.
        const auto& edges = g.edges();
        int join = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (w[i] != 0) continue;
            int pu = hs.piece_of[static_cast<std::size_t>(edges[i].first)];
            int pv = hs.piece_of[static_cast<std::size_t>(edges[i].second)];
            if (pu >= 0 && pv >= 0 && pu != pv) {
                join = static_cast<int>(i);
                break;
            }
        }
        if (join >= 0) {
            auto rework = [&](int anchor) {
                const HalfPiece& piece =
                    hs.pieces[static_cast<std::size_t>(hs.piece_of[static_cast<std::size_t>(anchor)])];
                std::vector<int> vs = piece.verts;
                auto it = std::find(vs.begin(), vs.end(), anchor);
                std::rotate(vs.begin(), it, vs.end());
                set_weight(g, w, vs[0], vs[1], 0);
                set_weight(g, w, vs[0], vs.back(), 0);
                std::vector<int> rest(vs.begin() + 1, vs.end());
                alternate_from_front(g, w, rest);
            };
            rework(edges[static_cast<std::size_t>(join)].first);
            rework(edges[static_cast<std::size_t>(join)].second);
            w[static_cast<std::size_t>(join)] = 2;
            ++rewrites;
            continue;
        }

        break;  // fixpoint
    }

    // Fixpoint sanity per the optimality contract: unweighted vertices may
    // only see full neighbors. Anything else admits a size-increasing
    // rewrite, so the input was not optimal.
    std::vector<int> load = loads(g, w);
    std::vector<char> full(static_cast<std::size_t>(g.vertex_count()), 0);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (w[i] == 2) {
            full[static_cast<std::size_t>(edges[i].first)] = 1;
            full[static_cast<std::size_t>(edges[i].second)] = 1;
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (load[static_cast<std::size_t>(v)] != 0) continue;
        for (int u : g.neighbors(v))
            if (!full[static_cast<std::size_t>(u)])
                throw NonOptimalInputError(
                    "unweighted vertex " + std::to_string(v) + " has non-full neighbor " +
                    std::to_string(u) + " at the fixpoint; input matching is not optimal");
    }

    HalfIntegralMatching out(g, std::move(w));
    assert(out.size_halves() == before);
    (void)before;
    if (rewrite_count) *rewrite_count = rewrites;
    return out;
}

CanonicalStats canonical_stats(const Graph& g, const HalfIntegralMatching& f) {
    if (f.edges() != g.edges() || f.vertex_count() != g.vertex_count())
        throw std::invalid_argument("matching does not belong to this graph");
    const std::vector<std::uint8_t>& w = f.weights();
    HalfStructure hs = half_structure(g, w);

    CanonicalStats stats;
    for (const HalfPiece& piece : hs.pieces) {
        if (!piece.is_cycle || piece.verts.size() % 2 == 0)
            throw std::invalid_argument(
                "half-weight edges do not form disjoint odd cycles; matching is not canonical");
        ++stats.c[(static_cast<int>(piece.verts.size()) - 1) / 2];
    }
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (w[i] == 2) ++stats.w1;
    for (int load : loads(g, w))
        if (load == 0) ++stats.w0;

    int accounted = stats.w0 + 2 * stats.w1;
    for (auto [i, count] : stats.c) accounted += (2 * i + 1) * count;
    if (accounted != g.vertex_count() || stats.size_halves() != f.size_halves())
        throw std::invalid_argument("canonical statistics identities violated");
    return stats;
}

bool is_canonical(const Graph& g, const HalfIntegralMatching& f, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const std::vector<std::uint8_t>& w = f.weights();
    HalfStructure hs = half_structure(g, w);
    for (const HalfPiece& piece : hs.pieces)
        if (!piece.is_cycle || piece.verts.size() % 2 == 0)
            return fail("half-weight edges do not form disjoint odd cycles");

    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int pu = hs.piece_of[static_cast<std::size_t>(edges[i].first)];
        int pv = hs.piece_of[static_cast<std::size_t>(edges[i].second)];
        if (pu >= 0 && pv >= 0 && pu != pv)
            return fail("edge joins two distinct half-weight cycles");
    }

    std::vector<int> load = loads(g, w);
    std::vector<char> full(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (w[i] == 2) {
            full[static_cast<std::size_t>(edges[i].first)] = 1;
            full[static_cast<std::size_t>(edges[i].second)] = 1;
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (load[static_cast<std::size_t>(v)] != 0) continue;
        for (int u : g.neighbors(v)) {
            if (load[static_cast<std::size_t>(u)] == 0)
                return fail("two unweighted vertices are adjacent");
            if (!full[static_cast<std::size_t>(u)])
                return fail("unweighted vertex has a non-full neighbor");
        }
    }
    return true;
}

namespace {

bool induced_hamiltonian(const Graph& g, const std::vector<int>& part) {
    const int k = static_cast<int>(part.size());
    if (k < 3) return false;
    std::vector<char> used(part.size(), 0);
    std::vector<int> path{part[0]};
    used[0] = 1;
    auto idx_of = [&](int v) {
        return static_cast<int>(std::lower_bound(part.begin(), part.end(), v) - part.begin());
    };
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == k)
            return g.has_edge(path.back(), part[0]);
        for (int v : part) {
            if (used[static_cast<std::size_t>(idx_of(v))]) continue;
            if (!g.has_edge(path.back(), v)) continue;
            used[static_cast<std::size_t>(idx_of(v))] = 1;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(idx_of(v))] = 0;
        }
        return false;
    };
    return extend();
}

struct FpmSearch {
    const Graph& g;
    int n;
    std::vector<char> assigned;
    std::vector<VertexSet> parts;
    std::unordered_set<std::uint32_t> dead;  // masks proven unpartitionable
    std::uint32_t mask = 0;

    bool run() {
        if (mask == (n >= 32 ? 0 : (std::uint32_t(1) << n) - 1)) return true;
        if (dead.count(mask)) return false;
        int v = 0;
        while (assigned[static_cast<std::size_t>(v)]) ++v;

        // K2 parts first, then odd Hamiltonian parts sized 3, 5, ...
        for (int u : g.neighbors(v)) {
            if (assigned[static_cast<std::size_t>(u)]) continue;
            if (place({v, u})) return true;
        }
        std::vector<int> pool;
        for (int u = v + 1; u < n; ++u)
            if (!assigned[static_cast<std::size_t>(u)]) pool.push_back(u);
        for (int size = 3; size <= static_cast<int>(pool.size()) + 1; size += 2) {
            std::vector<int> chosen;
            if (combos(pool, 0, size - 1, chosen, v)) return true;
        }
        dead.insert(mask);
        return false;
    }

    bool combos(const std::vector<int>& pool, std::size_t from, int need,
                std::vector<int>& chosen, int v) {
        if (need == 0) {
            VertexSet part{v};
            part.insert(part.end(), chosen.begin(), chosen.end());
            if (!induced_hamiltonian(g, part)) return false;
            return place(part);
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (combos(pool, i + 1, need - 1, chosen, v)) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool place(const VertexSet& part) {
        for (int x : part) {
            assigned[static_cast<std::size_t>(x)] = 1;
            mask |= std::uint32_t(1) << x;
        }
        parts.push_back(part);
        if (run()) return true;
        parts.pop_back();
        for (int x : part) {
            assigned[static_cast<std::size_t>(x)] = 0;
            mask &= ~(std::uint32_t(1) << x);
        }
        return false;
    }
};

}  // namespace

std::optional<FpmPartition> fpm_partition(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kFpmCap)
        throw CapExceededError("fpm_partition capped at n = " + std::to_string(kFpmCap) +
                               ", got " + std::to_string(n));
    FpmSearch search{g, n, std::vector<char>(static_cast<std::size_t>(n), 0), {}, {}, 0};
    if (!search.run()) return std::nullopt;
    return FpmPartition{std::move(search.parts)};
}

}  // namespace fracmatch
