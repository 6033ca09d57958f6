#include "fracmatch/verifier.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fracmatch {

std::string to_string(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::NotExtremal: return "not_extremal";
        case ExtremalClass::C5Type: return "c5";
        case ExtremalClass::K2K3Type: return "k2_k3";
        case ExtremalClass::TriangleStar: return "triangle_star";
        case ExtremalClass::DisjointTriangles: return "disjoint_triangles";
    }
    return "unknown";
}

namespace {

bool contains_spanning_cycle5(const Graph& g) {
    // n = 5: a 5-cycle subgraph is a Hamiltonian cycle.
    int perm[4] = {1, 2, 3, 4};
    do {
        if (g.has_edge(0, perm[0]) && g.has_edge(perm[0], perm[1]) &&
            g.has_edge(perm[1], perm[2]) && g.has_edge(perm[2], perm[3]) &&
            g.has_edge(perm[3], 0))
            return true;
    } while (std::next_permutation(perm, perm + 4));
    return false;
}

bool contains_triangle_plus_disjoint_edge5(const Graph& g) {
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))) continue;
                std::vector<int> rest;
                for (int v = 0; v < 5; ++v)
                    if (v != a && v != b && v != c) rest.push_back(v);
                if (g.has_edge(rest[0], rest[1])) return true;
            }
    return false;
}

bool is_triangle_comp(const Graph& g, const VertexSet& comp) {
    return comp.size() == 3 && g.has_edge(comp[0], comp[1]) && g.has_edge(comp[0], comp[2]) &&
           g.has_edge(comp[1], comp[2]);
}

bool is_triangle_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 5 || (n - 2) % 3 != 0) return false;
    for (int v = 0; v < n; ++v) {
        ComponentProfile profile = components(g, {v});
        if (profile.isolated != 1) continue;
        bool all_triangles = true;
        int triangles = 0;
        for (const VertexSet& comp : profile.comps) {
            if (comp.size() == 1) continue;
            if (!is_triangle_comp(g, comp)) {
                all_triangles = false;
                break;
            }
            ++triangles;
        }
        if (all_triangles && triangles >= 1 &&
            static_cast<int>(profile.comps.size()) == triangles + 1)
            return true;
    }
    return false;
}

bool all_components_k3(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    for (const VertexSet& comp : components(g, {}).comps)
        if (!is_triangle_comp(g, comp)) return false;
    return true;
}

}  // namespace

ExtremalClass classify_extremal(const Graph& g) {
    const bool connected = is_connected(g);
    if (g.vertex_count() == 5 && connected) {
        if (contains_spanning_cycle5(g)) return ExtremalClass::C5Type;
        if (contains_triangle_plus_disjoint_edge5(g)) return ExtremalClass::K2K3Type;
        if (is_triangle_star(g)) return ExtremalClass::TriangleStar;
    } else if (connected && is_triangle_star(g)) {
        return ExtremalClass::TriangleStar;
    }
    if (all_components_k3(g)) return ExtremalClass::DisjointTriangles;
    return ExtremalClass::NotExtremal;
}

GapRatioRecord evaluate(const Graph& g, BoundForm form) {
    GapRatioRecord rec;
    rec.n = g.vertex_count();
    rec.alpha = max_matching(g).size();
    rec.alpha_f_halves = alpha_f_halves(g);
    rec.gap_sixths = 3 * rec.alpha_f_halves - 6 * rec.alpha;
    rec.cls = classify_extremal(g);
    const long long h = rec.alpha_f_halves, a = rec.alpha, n = rec.n;
    if (form == BoundForm::Sharp) {
        rec.gap_ok = rec.gap_sixths <= rec.n - 2;
        rec.equality_gap = rec.gap_sixths == rec.n - 2;
        rec.ratio_ok = h * (n + 1) <= 3 * n * a;
        rec.equality_ratio = h * (n + 1) == 3 * n * a;
    } else {
        rec.gap_ok = rec.gap_sixths <= rec.n;
        rec.equality_gap = rec.gap_sixths == rec.n;
        rec.ratio_ok = a == 0 || h <= 3 * a;
        rec.equality_ratio = a > 0 && h == 3 * a;
    }
    return rec;
}

GapCertificate case_certificate_gap(const Graph& g, int witness_cap) {
    const int n = g.vertex_count();
    if (n < 5 || !is_connected(g))
        throw std::invalid_argument("gap certificate requires a connected graph with n >= 5");

    GapCertificate cert;
    DeficiencyWitness wit = tutte_berge_witness(g, witness_cap);
    DeficiencyWitness fwit = frac_deficiency_witness(g, witness_cap);
    cert.witness = wit.members;
    cert.deficiency = wit.value;
    cert.frac_deficiency = fwit.value;

    const int alpha = max_matching(g).size();
    const int halves = alpha_f_halves(g);
    cert.gap_sixths = 3 * halves - 6 * alpha;

    ComponentProfile profile = components(g, wit.members);
    cert.x = profile.isolated;
    cert.y = profile.odd_big;
    const int s = static_cast<int>(wit.members.size());

    auto require = [&](bool cond, const std::string& what) {
        if (!cond) cert.failures.push_back(what);
    };

    // Shared ground facts: the witness value, both matching-number formulas,
    // and the all-odd-components property forced by the largest-witness
    // tie-break.
    require(cert.deficiency == profile.odd - s, "deficiency != o(G-S) - |S|");
    require(2 * alpha == n - cert.deficiency, "2*alpha != n - def");
    require(halves == n - cert.frac_deficiency, "2*alpha_f != n - def_f");
    require(cert.gap_sixths == 3 * (cert.deficiency - cert.frac_deficiency),
            "gap != (def - def_f)/2");
    require(static_cast<int>(profile.comps.size()) == profile.odd,
            "largest witness left an even component");
    require(cert.frac_deficiency >= 0, "def_f < 0");
    require(n >= s + cert.x + 3 * cert.y, "n < |S| + x + 3y");

    if (wit.members.empty()) {
        cert.case_id = GapCase::EmptyWitness;
        require(2 * alpha == n - n % 2, "alpha is not floor(n/2) with empty witness");
        require(cert.gap_sixths <= 3, "gap > 1/2 with empty witness");
        require(3 <= n - 2, "1/2 > (n-2)/6");
    } else if (cert.x == 0) {
        cert.case_id = GapCase::NoIsolatedVertices;
        require(cert.gap_sixths <= 3 * (cert.y - s), "gap > (y - |S|)/2");
        require(3 * (cert.y - s) <= n - 4 * s, "(y - |S|)/2 > (n - 4|S|)/6");
        require(n - 4 * s <= n - 4, "|S| < 1");
        require(cert.gap_sixths < n - 2, "equality reached in the strict branch");
    } else {
        cert.case_id = GapCase::IsolatedVertices;
        require(cert.frac_deficiency >= cert.x - s, "def_f < x - |S|");
        require(cert.gap_sixths <= 3 * cert.y, "gap > y/2");
        require(3 * cert.y <= n - cert.x - s, "y/2 > (n - x - |S|)/6");
        require(n - cert.x - s <= n - 2, "x + |S| < 2");
    }
    require(cert.gap_sixths <= n - 2, "gap above (n-2)/6");
    cert.chain_holds = cert.failures.empty();
    return cert;
}

RatioCertificate case_certificate_ratio(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 5 || !is_connected(g))
        throw std::invalid_argument("ratio certificate requires a connected graph with n >= 5");

    RatioCertificate cert;
    HalfIntegralMatching canon = canonicalize(g, extract_half_integral(g));
    cert.stats = canonical_stats(g, canon);
    cert.c_total = cert.stats.cycle_count();
    cert.alpha = max_matching(g).size();
    cert.alpha_f_halves = alpha_f_halves(g);

    const long long w0 = cert.stats.w0, w1 = cert.stats.w1, c = cert.c_total;
    const long long a = cert.alpha, h = cert.alpha_f_halves, nn = n;
    const long long a_lb = cert.stats.matching_lower_bound();

    if (w0 >= 1 && w1 == 0)
        throw std::logic_error(
            "canonical matching with unweighted vertices but no full edge on a connected graph");

    auto require = [&](bool cond, const std::string& what) {
        if (!cond) cert.failures.push_back(what);
    };

    require(h == nn - w0, "2*alpha_f != n - w0");
    require(h == cert.stats.size_halves(), "canonical size != 2*alpha_f");
    require(a >= a_lb, "alpha below w1 + sum i*c_i");
    require(2 * a_lb == nn - w0 - c, "2*(w1 + sum i*c_i) != n - w0 - sum c_i");

    if (w0 == 0 && w1 == 0) {
        cert.case_number = 1;
        require(cert.stats.c.size() == 1, "more than one cycle length with w0 = w1 = 0");
        require(c == 1, "more than one half-weight cycle with w0 = w1 = 0");
        const int i = cert.stats.c.empty() ? 0 : cert.stats.c.begin()->first;
        cert.cycle_i = i;
        require(i >= 2, "cycle shorter than 5 with n >= 5");
        require(nn == 2 * i + 1, "n != 2i + 1");
        require(a == i, "alpha != i");
        require(2 * h <= 5 * a, "ratio above 5/4");
        require(10 * nn + 10 <= 12 * nn, "5/4 above 3n/(2n+2)");
    } else if (w0 == 0) {
        cert.case_number = 3;
        require(3 * c <= nn - 2 * w1, "sum c_i above (n - 2 w1)/3");
        require(2 * nn + 2 * w1 <= 3 * (nn - c), "n/(n - sum c_i) above 3n/(2n + 2 w1)");
        require(w1 >= 1, "w1 < 1");
    } else {
        cert.case_number = 4;
        require(w1 >= 1, "w1 < 1 outside the forbidden case");
        require(3 * c <= nn - 2 * w1 - w0, "sum c_i above (n - 2 w1 - w0)/3");
        require(2 * (nn + w1 - w0) <= 3 * (nn - w0 - c),
                "(n - w0)/(n - w0 - sum c_i) above 3(n - w0)/(2(n + w1 - w0))");
        require((nn - w0) * (nn + w1) < nn * (nn + w1 - w0), "strict middle step fails");
        require(h * (nn + 1) < 3 * nn * a, "ratio not strictly below 3n/(2n+2)");
    }
    require(h * (nn + 1) <= 3 * nn * a, "ratio above 3n/(2n+2)");
    cert.chain_holds = cert.failures.empty();
    return cert;
}

bool is_expected_equality_class(ExtremalClass cls, int n, CorpusMode mode) {
    if (mode == CorpusMode::UnionCorollaries || n < 5)
        return cls == ExtremalClass::DisjointTriangles;
    if (n == 5) return cls == ExtremalClass::C5Type || cls == ExtremalClass::K2K3Type;
    return cls == ExtremalClass::TriangleStar;
}

VerificationReport verify_corpus(const CorpusSource& source, CorpusMode mode, int jobs,
                                 const RecordSink& sink) {
    if (jobs < 1) jobs = 1;

    struct Item {
        long long index;
        CorpusItem corpus;
    };
    struct Result {
        long long index;
        GapRatioRecord rec;
        bool violation;
        bool char_failure;
    };

    std::mutex in_mtx, out_mtx;
    long long next_index = 0;
    bool exhausted = false;
    std::vector<Result> results;
    std::exception_ptr error;

    auto pull = [&]() -> std::optional<Item> {
        std::lock_guard lock(in_mtx);
        if (exhausted || error) return std::nullopt;
        std::optional<CorpusItem> item = source();
        if (!item) {
            exhausted = true;
            return std::nullopt;
        }
        // Input contract checks happen on the pulling thread so the error
        // surfaces deterministically.
        if (mode == CorpusMode::ConnectedTheorems && !is_connected(item->graph))
            throw std::invalid_argument("connected mode requires connected graphs: " +
                                        item->graph6);
        if (mode == CorpusMode::UnionCorollaries && item->graph.edge_count() == 0)
            throw std::invalid_argument("union mode requires at least one edge: " + item->graph6);
        return Item{next_index++, std::move(*item)};
    };

    auto work = [&]() {
        try {
            for (;;) {
                std::optional<Item> item;
                {
                    item = pull();
                }
                if (!item) return;
                const Graph& g = item->corpus.graph;
                const int n = g.vertex_count();
                BoundForm form =
                    (mode == CorpusMode::ConnectedTheorems && n >= 5) ? BoundForm::Sharp
                                                                      : BoundForm::Coarse;
                GapRatioRecord rec = evaluate(g, form);
                rec.graph6 = item->corpus.graph6;
                bool expected = is_expected_equality_class(rec.cls, n, mode);
                bool violation = !rec.gap_ok || !rec.ratio_ok;
                bool char_failure =
                    rec.equality_gap != expected || rec.equality_ratio != expected;
                std::lock_guard lock(out_mtx);
                results.push_back({item->index, std::move(rec), violation, char_failure});
            }
        } catch (...) {
            std::lock_guard lock(in_mtx);
            if (!error) error = std::current_exception();
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    std::sort(results.begin(), results.end(),
              [](const Result& a, const Result& b) { return a.index < b.index; });

    VerificationReport report;
    for (const Result& r : results) {
        ++report.total;
        ++report.class_counts[r.rec.cls];
        if (r.violation) report.bound_violations.push_back(r.rec.graph6);
        if (r.char_failure) report.characterization_failures.push_back(r.rec.graph6);
        if (r.rec.equality_gap || r.rec.equality_ratio)
            report.equality_graphs.push_back(r.rec.graph6);
        if (sink) sink(r.rec);
    }
    return report;
}

}  // namespace fracmatch
