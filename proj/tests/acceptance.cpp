// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavy corpus passes run on all hardware threads; every comparison
// is exact integer arithmetic.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fracmatch/enumerate.hpp"
#include "fracmatch/fractional.hpp"
#include "fracmatch/generators.hpp"
#include "fracmatch/graph6.hpp"
#include "fracmatch/matching.hpp"
#include "fracmatch/verifier.hpp"

using namespace fracmatch;
using Clock = std::chrono::steady_clock;

namespace {

int g_jobs = std::max(1u, std::thread::hardware_concurrency());

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    if (g_jobs == 1 || count < 2) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < g_jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

// Shared corpus of connected-graph canonical keys, sizes 1..9.
const std::vector<std::vector<std::uint64_t>>& corpus_levels() {
    static std::vector<std::vector<std::uint64_t>> levels = detail::connected_rep_keys(9);
    return levels;
}

constexpr long long kConnectedCounts[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};

struct Failures {
    std::mutex mtx;
    std::vector<std::string> items;
    void add(const std::string& s) {
        std::lock_guard lock(mtx);
        if (items.size() < 10) items.push_back(s);
    }
    bool empty() {
        std::lock_guard lock(mtx);
        return items.empty();
    }
    std::string first() {
        std::lock_guard lock(mtx);
        return items.empty() ? "" : items.front();
    }
};

// ---- criterion 1 -----------------------------------------------------

bool criterion1(std::string& detail) {
    auto t0 = Clock::now();
    struct Golden {
        Graph g;
        int alpha, halves;
        const char* name;
    };
    std::vector<Golden> golden{{gen_complete(3), 1, 3, "K3"},
                               {gen_path(3), 1, 2, "P3"},
                               {gen_star(3), 1, 2, "K_{1,3}"},
                               {gen_path(4), 2, 4, "P4"}};
    for (const Golden& c : golden) {
        if (max_matching(c.g).size() != c.alpha) {
            detail = std::string(c.name) + ": wrong matching number";
            return false;
        }
        if (alpha_f_halves(c.g) != c.halves) {
            detail = std::string(c.name) + ": wrong fractional matching number";
            return false;
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 1.0) {
        detail = "exceeded 1 second";
        return false;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "4 golden cases in %.3fs", dt);
    detail = buf;
    return true;
}

// ---- criteria 2 and 3 ------------------------------------------------

bool oracle_equivalence(bool fractional, std::string& detail) {
    auto t0 = Clock::now();
    long long total = 0;
    Failures bad;
    for (int n = 1; n <= 8; ++n) {
        const auto& keys = corpus_levels()[static_cast<std::size_t>(n - 1)];
        if (static_cast<long long>(keys.size()) != kConnectedCounts[n - 1]) {
            detail = "corpus count mismatch at n=" + std::to_string(n);
            return false;
        }
        total += static_cast<long long>(keys.size());
        parallel_for(keys.size(), [&](std::size_t i) {
            Graph g = graph_from_key(keys[i], n);
            int lhs, witness;
            if (fractional) {
                lhs = alpha_f_halves(g);
                witness = frac_deficiency_witness(g).value;
            } else {
                lhs = 2 * max_matching(g).size();
                witness = tutte_berge_witness(g).value;
            }
            if (lhs + witness != n) bad.add(encode_graph6(g));
        });
    }
    if (!bad.empty()) {
        detail = "formula fails on " + bad.first();
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld graphs, 0 exceptions, %.1fs", total, seconds_since(t0));
    detail = buf;
    return true;
}

// ---- criteria 4 and 5 (one shared corpus pass) -----------------------

struct SharpPass {
    bool ran = false;
    bool counts_ok = true;
    std::string count_note;
    std::vector<std::string> gap_violations, ratio_violations;
    std::vector<std::string> gap_char_mismatch, ratio_char_mismatch, eq_flag_mismatch;
    long long total = 0;
    long long equality_total = 0;
    double elapsed = 0;
};

SharpPass& sharp_pass() {
    static SharpPass pass;
    if (pass.ran) return pass;
    pass.ran = true;
    auto t0 = Clock::now();

    auto consume = [&](int n, const CorpusSource& source) {
        long long seen = 0;
        RecordSink sink = [&](const GapRatioRecord& rec) {
            ++seen;
            bool expected = is_expected_equality_class(rec.cls, rec.n, CorpusMode::ConnectedTheorems);
            if (!rec.gap_ok) pass.gap_violations.push_back(rec.graph6);
            if (!rec.ratio_ok) pass.ratio_violations.push_back(rec.graph6);
            if (rec.equality_gap != expected) pass.gap_char_mismatch.push_back(rec.graph6);
            if (rec.equality_ratio != expected) pass.ratio_char_mismatch.push_back(rec.graph6);
            if (rec.equality_gap != rec.equality_ratio) pass.eq_flag_mismatch.push_back(rec.graph6);
            if (rec.equality_gap) ++pass.equality_total;
        };
        verify_corpus(source, CorpusMode::ConnectedTheorems, g_jobs, sink);
        if (seen != kConnectedCounts[n - 1]) {
            pass.counts_ok = false;
            pass.count_note = "n=" + std::to_string(n) + " count " + std::to_string(seen) +
                              " != " + std::to_string(kConnectedCounts[n - 1]);
        }
        pass.total += seen;
    };

    for (int n = 5; n <= 8; ++n) {
        const auto& keys = corpus_levels()[static_cast<std::size_t>(n - 1)];
        std::size_t next = 0;
        consume(n, [&]() -> std::optional<CorpusItem> {
            if (next >= keys.size()) return std::nullopt;
            Graph g = graph_from_key(keys[next++], n);
            std::string g6 = encode_graph6(g);
            return CorpusItem{std::move(g), std::move(g6)};
        });
    }

    // The n=9 corpus goes through the file-ingestion path: write it as
    // graph6 once, then verify from the file.
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "fracmatch_acceptance_n9.g6";
    {
        std::ofstream out(path);
        for (std::uint64_t key : corpus_levels()[8])
            out << encode_graph6(graph_from_key(key, 9)) << "\n";
    }
    {
        std::ifstream in(path);
        auto lines = std::make_shared<std::vector<std::string>>();
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines->push_back(line);
        std::size_t next = 0;
        consume(9, [lines, next]() mutable -> std::optional<CorpusItem> {
            if (next >= lines->size()) return std::nullopt;
            const std::string& l = (*lines)[next++];
            return CorpusItem{parse_graph6(l), l};
        });
    }
    pass.elapsed = seconds_since(t0);
    return pass;
}

bool criterion4(std::string& detail) {
    SharpPass& pass = sharp_pass();
    if (!pass.counts_ok) {
        detail = pass.count_note;
        return false;
    }
    if (!pass.gap_violations.empty()) {
        detail = "gap bound violated on " + pass.gap_violations.front();
        return false;
    }
    if (!pass.gap_char_mismatch.empty()) {
        detail = "gap equality set mismatch on " + pass.gap_char_mismatch.front();
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld graphs, 0 violations, %lld equality graphs, %.1fs",
                  pass.total, pass.equality_total, pass.elapsed);
    detail = buf;
    return true;
}

bool criterion5(std::string& detail) {
    SharpPass& pass = sharp_pass();
    if (!pass.ratio_violations.empty()) {
        detail = "ratio bound violated on " + pass.ratio_violations.front();
        return false;
    }
    if (!pass.ratio_char_mismatch.empty()) {
        detail = "ratio equality set mismatch on " + pass.ratio_char_mismatch.front();
        return false;
    }
    if (!pass.eq_flag_mismatch.empty()) {
        detail = "gap/ratio equality sets differ on " + pass.eq_flag_mismatch.front();
        return false;
    }
    detail = "same corpus, 0 violations, equality set identical to the gap set";
    return true;
}

// ---- criterion 6 -----------------------------------------------------

bool criterion6(std::string& detail) {
    auto t0 = Clock::now();
    const auto& levels = corpus_levels();

    // Per-part matching numbers for the additivity cross-check.
    std::vector<std::vector<std::pair<int, int>>> part_values(9);
    for (int s = 1; s <= 8; ++s) {
        const auto& keys = levels[static_cast<std::size_t>(s - 1)];
        part_values[static_cast<std::size_t>(s)].resize(keys.size());
        parallel_for(keys.size(), [&](std::size_t i) {
            Graph g = graph_from_key(keys[i], s);
            part_values[static_cast<std::size_t>(s)][i] = {max_matching(g).size(),
                                                           alpha_f_halves(g)};
        });
    }

    // All multisets of connected parts with total size <= 9 and every part
    // of size <= 8; a part of size 9 can only appear alone and is handled
    // from the level-9 keys directly.
    struct Multiset {
        std::vector<std::pair<int, std::size_t>> parts;  // (size, key index)
    };
    std::vector<Multiset> multisets;
    std::vector<std::pair<int, std::size_t>> stack;
    std::function<void(int, std::size_t, int)> grow = [&](int size, std::size_t index,
                                                          int remaining) {
        if (!stack.empty()) multisets.push_back({stack});
        for (int s = size; s <= 8 && s <= remaining; ++s) {
            const auto& keys = levels[static_cast<std::size_t>(s - 1)];
            std::size_t from = s == size ? index : 0;
            for (std::size_t i = from; i < keys.size(); ++i) {
                stack.emplace_back(s, i);
                grow(s, i, remaining - s);
                stack.pop_back();
            }
        }
    };
    grow(1, 0, 9);

    const long long all_graph_counts_total = 288266;  // sum of graph counts, n = 1..9
    long long built = static_cast<long long>(multisets.size()) +
                      static_cast<long long>(levels[8].size());
    if (built != all_graph_counts_total) {
        detail = "union corpus size " + std::to_string(built) + " != 288266";
        return false;
    }

    std::atomic<long long> with_edge{0}, gap_equality{0};
    Failures bad;
    std::mutex ratio_mtx;
    std::vector<std::string> ratio_char_mismatch;
    bool mismatches_are_padded_triangles = true;

    // alpha_sum/halves_sum below -1 skip the additivity cross-check.
    auto check_union = [&](const Graph& g, int alpha_sum, int halves_sum) {
        with_edge.fetch_add(1);
        GapRatioRecord rec = evaluate(g, BoundForm::Coarse);
        if (alpha_sum >= 0 && (rec.alpha != alpha_sum || rec.alpha_f_halves != halves_sum))
            bad.add("additivity fails on " + encode_graph6(g));
        bool kk3 = rec.cls == ExtremalClass::DisjointTriangles;
        if (!rec.gap_ok || !rec.ratio_ok) bad.add("bound fails on " + encode_graph6(g));
        if (rec.equality_gap != kk3)
            bad.add("gap equality characterization fails on " + encode_graph6(g));
        if (rec.equality_ratio != kk3) {
            // Measured shape of every known mismatch: triangles padded with
            // isolated vertices, which keep the ratio pinned at 3/2.
            bool padded = rec.equality_ratio && !kk3;
            int triangles = 0, singletons = 0, other = 0;
            for (const VertexSet& comp : components(g, {}).comps) {
                if (comp.size() == 1)
                    ++singletons;
                else if (comp.size() == 3 && g.has_edge(comp[0], comp[1]) &&
                         g.has_edge(comp[0], comp[2]) && g.has_edge(comp[1], comp[2]))
                    ++triangles;
                else
                    ++other;
            }
            padded = padded && triangles >= 1 && singletons >= 1 && other == 0;
            std::lock_guard lock(ratio_mtx);
            ratio_char_mismatch.push_back(encode_graph6(g));
            if (!padded) mismatches_are_padded_triangles = false;
        }
        if (rec.equality_gap) gap_equality.fetch_add(1);
    };

    parallel_for(multisets.size(), [&](std::size_t m) {
        const Multiset& ms = multisets[m];
        std::vector<Graph> parts;
        int alpha_sum = 0, halves_sum = 0;
        for (auto [s, i] : ms.parts) {
            parts.push_back(graph_from_key(levels[static_cast<std::size_t>(s - 1)][i], s));
            alpha_sum += part_values[static_cast<std::size_t>(s)][i].first;
            halves_sum += part_values[static_cast<std::size_t>(s)][i].second;
        }
        Graph g = disjoint_union(parts);
        if (g.edge_count() == 0) return;
        check_union(g, alpha_sum, halves_sum);
    });
    // Size-9 singles.
    parallel_for(levels[8].size(), [&](std::size_t i) {
        check_union(graph_from_key(levels[8][i], 9), -1, -1);
    });

    if (!bad.empty()) {
        detail = bad.first();
        return false;
    }
    if (with_edge.load() != all_graph_counts_total - 9) {
        detail = "expected 288257 unions with an edge, saw " + std::to_string(with_edge.load());
        return false;
    }
    // kK3 unions with 3k <= 9: k = 1, 2, 3.
    if (gap_equality.load() != 3) {
        detail = "expected exactly 3 gap-equality unions (k*K3), saw " +
                 std::to_string(gap_equality.load());
        return false;
    }
    if (!ratio_char_mismatch.empty()) {
        char buf[256];
        if (mismatches_are_padded_triangles)
            std::snprintf(buf, sizeof buf,
                          "ratio equality is NOT exclusive to k*K3: %zu unions of triangles plus "
                          "isolated vertices (e.g. %s) also reach ratio 3/2; bounds and the gap "
                          "characterization hold on all %lld unions",
                          ratio_char_mismatch.size(), ratio_char_mismatch.front().c_str(),
                          with_edge.load());
        else
            std::snprintf(buf, sizeof buf, "unexpected ratio equality mismatch on %s",
                          ratio_char_mismatch.front().c_str());
        detail = buf;
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld unions, 0 exceptions, equality exactly on k*K3, %.1fs",
                  with_edge.load(), seconds_since(t0));
    detail = buf;
    return true;
}

// ---- criterion 7 -----------------------------------------------------

bool criterion7(std::string& detail) {
    auto t0 = Clock::now();
    std::mt19937 rng(20250808);
    std::vector<Graph> graphs;
    graphs.reserve(10000);
    while (graphs.size() < 10000) {
        int n = 5 + static_cast<int>(rng() % 8);  // 5..12
        double p = 0.15 + 0.75 * static_cast<double>(rng() % 1000) / 1000.0;
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) graphs.push_back(std::move(g));
    }

    Failures bad;
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        const int n = g.vertex_count();
        int halves = alpha_f_halves(g);
        int rewrites = 0;
        HalfIntegralMatching canon = canonicalize(g, extract_half_integral(g), &rewrites);
        std::string why;
        if (rewrites > n / 2) {
            bad.add("rewrite count " + std::to_string(rewrites) + " above n/2 on " +
                    encode_graph6(g));
            return;
        }
        if (canon.size_halves() != halves) {
            bad.add("size not preserved on " + encode_graph6(g));
            return;
        }
        if (!is_canonical(g, canon, &why)) {
            bad.add(why + " on " + encode_graph6(g));
            return;
        }
        CanonicalStats stats = canonical_stats(g, canon);
        int accounted = stats.w0 + 2 * stats.w1;
        for (auto [ci, count] : stats.c) accounted += (2 * ci + 1) * count;
        if (accounted != n || stats.size_halves() != halves) {
            bad.add("stats identity fails on " + encode_graph6(g));
            return;
        }
        if (stats.matching_lower_bound() > max_matching(g).size())
            bad.add("matching lower bound fails on " + encode_graph6(g));
    });
    if (!bad.empty()) {
        detail = bad.first();
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "10000 random graphs (n=5..12), 0 exceptions, %.1fs",
                  seconds_since(t0));
    detail = buf;
    return true;
}

// ---- criterion 8 -----------------------------------------------------

bool induced_hamiltonian_check(const Graph& g, const VertexSet& part) {
    const int k = static_cast<int>(part.size());
    if (k < 3) return false;
    std::vector<int> order(part.begin(), part.end());
    std::sort(order.begin() + 1, order.end());
    std::vector<char> used(part.size(), 0);
    std::function<bool(int, int)> extend = [&](int at, int depth) -> bool {
        if (depth == k) return g.has_edge(at, order[0]);
        for (int i = 1; i < k; ++i) {
            if (used[static_cast<std::size_t>(i)] || !g.has_edge(at, order[static_cast<std::size_t>(i)]))
                continue;
            used[static_cast<std::size_t>(i)] = 1;
            if (extend(order[static_cast<std::size_t>(i)], depth + 1)) return true;
            used[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    };
    return extend(order[0], 1);
}

bool criterion8(std::string& detail) {
    auto t0 = Clock::now();
    Failures bad;
    long long total = 0, with_fpm = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto& keys = corpus_levels()[static_cast<std::size_t>(n - 1)];
        total += static_cast<long long>(keys.size());
        std::atomic<long long> found{0};
        parallel_for(keys.size(), [&](std::size_t i) {
            Graph g = graph_from_key(keys[i], n);
            bool fpm_expected = alpha_f_halves(g) == n;
            auto partition = fpm_partition(g);
            if (partition.has_value() != fpm_expected) {
                bad.add("presence mismatch on " + encode_graph6(g));
                return;
            }
            if (!partition) return;
            found.fetch_add(1);
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            for (const VertexSet& part : partition->parts) {
                for (int v : part) {
                    if (seen[static_cast<std::size_t>(v)]) bad.add("overlap on " + encode_graph6(g));
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                bool ok_part =
                    (part.size() == 2 && g.has_edge(part[0], part[1])) ||
                    (part.size() % 2 == 1 && induced_hamiltonian_check(g, part));
                if (!ok_part) bad.add("bad part on " + encode_graph6(g));
            }
            for (int v = 0; v < n; ++v)
                if (!seen[static_cast<std::size_t>(v)]) bad.add("uncovered vertex on " + encode_graph6(g));
        });
        with_fpm += found.load();
    }
    if (!bad.empty()) {
        detail = bad.first();
        return false;
    }
    char buf[112];
    std::snprintf(buf, sizeof buf,
                  "%lld graphs, partitions exactly when 2*alpha_f=n (%lld cases), %.1fs", total,
                  with_fpm, seconds_since(t0));
    detail = buf;
    return true;
}

// ---- criterion 9 -----------------------------------------------------

bool criterion9(std::string& detail) {
    auto t0 = Clock::now();
    Failures bad;
    long long total = 0;
    std::atomic<long long> case_counts[5] = {};
    for (int n = 5; n <= 8; ++n) {
        const auto& keys = corpus_levels()[static_cast<std::size_t>(n - 1)];
        total += static_cast<long long>(keys.size());
        parallel_for(keys.size(), [&](std::size_t i) {
            Graph g = graph_from_key(keys[i], n);
            GapCertificate gap = case_certificate_gap(g);
            if (!gap.chain_holds) {
                bad.add("gap chain fails on " + encode_graph6(g) +
                        (gap.failures.empty() ? "" : ": " + gap.failures.front()));
                return;
            }
            try {
                RatioCertificate ratio = case_certificate_ratio(g);
                if (!ratio.chain_holds) {
                    bad.add("ratio chain fails on " + encode_graph6(g) +
                            (ratio.failures.empty() ? "" : ": " + ratio.failures.front()));
                    return;
                }
                case_counts[ratio.case_number].fetch_add(1);
            } catch (const std::logic_error&) {
                bad.add("ratio case 2 reached on " + encode_graph6(g));
            }
        });
    }
    if (!bad.empty()) {
        detail = bad.first();
        return false;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%lld graphs, all chains hold, case2 never (cases 1/3/4: %lld/%lld/%lld), %.1fs",
                  total, case_counts[1].load(), case_counts[3].load(), case_counts[4].load(),
                  seconds_since(t0));
    detail = buf;
    return true;
}

// ---- criterion 10 ----------------------------------------------------

bool criterion10(std::string& detail) {
    for (int k = 1; k <= 6; ++k) {
        Graph star = gen_triangle_star(k);
        GapRatioRecord rec = evaluate(star, BoundForm::Sharp);
        if (!rec.equality_gap || rec.gap_sixths != rec.n - 2) {
            detail = "triangle-star k=" + std::to_string(k) + " misses gap equality";
            return false;
        }
        if (!rec.equality_ratio) {
            detail = "triangle-star k=" + std::to_string(k) + " misses ratio equality";
            return false;
        }
        Graph tri = gen_disjoint_triangles(k);
        GapRatioRecord urec = evaluate(tri, BoundForm::Coarse);
        if (!urec.equality_gap || urec.gap_sixths != urec.n) {
            detail = "k*K3 k=" + std::to_string(k) + " misses gap n/6";
            return false;
        }
        if (!urec.equality_ratio || urec.alpha_f_halves != 3 * urec.alpha) {
            detail = "k*K3 k=" + std::to_string(k) + " misses ratio 3/2";
            return false;
        }
    }
    detail = "triangle-star and k*K3 hit both equalities for k=1..6";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "golden small-case values", criterion1},
        {2, "integral oracle equivalence on all connected graphs n<=8",
         [](std::string& d) { return oracle_equivalence(false, d); }},
        {3, "fractional oracle equivalence on all connected graphs n<=8",
         [](std::string& d) { return oracle_equivalence(true, d); }},
        {4, "gap bound and equality characterization, connected 5<=n<=9", criterion4},
        {5, "ratio bound and equality characterization, connected 5<=n<=9", criterion5},
        {6, "coarse bounds over all disjoint unions with n<=9", criterion6},
        {7, "canonicalization invariants on 10000 random graphs", criterion7},
        {8, "fractional-perfect-matching partition equivalence, n<=8", criterion8},
        {9, "proof-case certificates, connected 5<=n<=8", criterion9},
        {10, "extremal generators achieve equality for k=1..6", criterion10},
    };

    std::printf("acceptance: %d worker threads\n", g_jobs);
    int failed = 0;
    for (Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}
