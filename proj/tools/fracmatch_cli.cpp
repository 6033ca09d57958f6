// Command-line front end: per-graph matching statistics, deficiency
// witnesses, canonical fractional matchings, corpus verification, and
// generators for the extremal families. graph6 in, JSON-lines / TSV / human
// text out. Exit codes: 0 success, 1 bound or characterization violation,
// 2 input error.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "fracmatch/enumerate.hpp"
#include "fracmatch/fractional.hpp"
#include "fracmatch/generators.hpp"
#include "fracmatch/graph6.hpp"
#include "fracmatch/matching.hpp"
#include "fracmatch/verifier.hpp"

using json = nlohmann::ordered_json;
using namespace fracmatch;

namespace {

struct Options {
    std::string input = "-";
    std::string format = "json";
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    int cap = kDefaultWitnessCap;
    int enumerate_n = 0;
    std::string mode = "connected";
    std::string family;
    int k = 1;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    auto drain = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (path == "-") {
        drain(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        drain(in);
    }
    return lines;
}

struct LineFailure {
    std::size_t line_no;  // 1-based
    std::string message;
};

// Applies fn to every input line with `jobs` workers and prints the results
// in input order, so output bytes never depend on scheduling.
int run_per_line(const Options& opt,
                 const std::function<std::string(const std::string&, std::size_t)>& fn) {
    std::vector<std::string> lines;
    try {
        lines = read_lines(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> out(lines.size());
    std::optional<LineFailure> failure;
    std::mutex mtx;
    std::atomic<std::size_t> cursor{0};
    int jobs = std::max(1, opt.jobs);

    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                out[i] = fn(lines[i], i + 1);
            } catch (const std::exception& e) {
                std::lock_guard lock(mtx);
                // keep the lowest failing line so the report is deterministic
                if (!failure || failure->line_no > i + 1)
                    failure = LineFailure{i + 1, e.what()};
            }
        }
    };
    if (jobs == 1 || lines.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) {
        std::cerr << "line " << failure->line_no << ": " << failure->message << "\n";
        return 2;
    }
    for (const std::string& s : out) std::cout << s << "\n";
    return 0;
}

std::string class_name(ExtremalClass c) { return to_string(c); }

std::string fraction_halves(int halves) {
    if (halves % 2 == 0) return std::to_string(halves / 2);
    return std::to_string(halves) + "/2";
}

int cmd_stats(const Options& opt) {
    return run_per_line(opt, [&](const std::string& line, std::size_t) {
        Graph g = parse_graph6(line);
        GapRatioRecord rec = evaluate(g);
        rec.graph6 = line;
        if (opt.format == "json") {
            json j{{"graph6", rec.graph6},
                   {"n", rec.n},
                   {"alpha", rec.alpha},
                   {"alpha_f_halves", rec.alpha_f_halves},
                   {"gap_sixths", rec.gap_sixths},
                   {"class", class_name(rec.cls)}};
            return j.dump();
        }
        if (opt.format == "tsv") {
            std::ostringstream os;
            os << rec.graph6 << '\t' << rec.n << '\t' << rec.alpha << '\t'
               << rec.alpha_f_halves << '\t' << rec.gap_sixths << '\t' << class_name(rec.cls);
            return os.str();
        }
        std::ostringstream os;
        os << rec.graph6 << ": n=" << rec.n << " alpha=" << rec.alpha
           << " alpha_f=" << fraction_halves(rec.alpha_f_halves) << " gap=" << rec.gap_sixths
           << "/6 class=" << class_name(rec.cls);
        return os.str();
    });
}

int cmd_witness(const Options& opt) {
    std::atomic<long long> done{0}, failed{0};
    int rc = run_per_line(opt, [&](const std::string& line, std::size_t) {
        Graph g = parse_graph6(line);
        auto join = [](const VertexSet& s) {
            std::string t;
            for (std::size_t i = 0; i < s.size(); ++i)
                t += (i ? "," : "") + std::to_string(s[i]);
            return t.empty() ? std::string("-") : t;
        };
        try {
            DeficiencyWitness odd = tutte_berge_witness(g, opt.cap);
            DeficiencyWitness iso = frac_deficiency_witness(g, opt.cap);
            ++done;
            if (opt.format == "json") {
                json j{{"graph6", line},
                       {"odd_component", {{"s", json(odd.members)}, {"value", odd.value}}},
                       {"isolated_vertex", {{"s", json(iso.members)}, {"value", iso.value}}}};
                return j.dump();
            }
            std::ostringstream os;
            if (opt.format == "tsv")
                os << line << '\t' << odd.value << '\t' << join(odd.members) << '\t' << iso.value
                   << '\t' << join(iso.members);
            else
                os << line << ": def=" << odd.value << " S={" << join(odd.members)
                   << "} def_f=" << iso.value << " S={" << join(iso.members) << "}";
            return os.str();
        } catch (const CapExceededError& e) {
            ++failed;
            if (opt.format == "json") return json{{"graph6", line}, {"error", e.what()}}.dump();
            return line + ": error: " + e.what();
        }
    });
    if (rc != 0) return rc;
    return (failed > 0 && done == 0) ? 1 : 0;
}

int cmd_canonical(const Options& opt) {
    return run_per_line(opt, [&](const std::string& line, std::size_t) {
        Graph g = parse_graph6(line);
        HalfIntegralMatching canon = canonicalize(g, extract_half_integral(g));
        CanonicalStats stats = canonical_stats(g, canon);
        json edges = json::array();
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            if (canon.weight(static_cast<int>(i)) > 0)
                edges.push_back({g.edges()[i].first, g.edges()[i].second,
                                 canon.weight(static_cast<int>(i))});
        json cmap = json::object();
        for (auto [i, count] : stats.c) cmap[std::to_string(i)] = count;
        if (opt.format == "json") {
            json j{{"graph6", line},
                   {"edges", edges},
                   {"stats", {{"w0", stats.w0}, {"w1", stats.w1}, {"c", cmap}}}};
            return j.dump();
        }
        std::ostringstream os;
        if (opt.format == "tsv")
            os << line << '\t' << stats.w0 << '\t' << stats.w1 << '\t' << cmap.dump() << '\t'
               << edges.dump();
        else
            os << line << ": w0=" << stats.w0 << " w1=" << stats.w1 << " cycles=" << cmap.dump()
               << " edges=" << edges.dump();
        return os.str();
    });
}

json report_json(const VerificationReport& report, const std::string& mode) {
    json counts = json::object();
    for (auto [cls, count] : report.class_counts) counts[class_name(cls)] = count;
    return json{{"type", "summary"},
                {"mode", mode},
                {"total", report.total},
                {"violations", report.bound_violations},
                {"characterization_failures", report.characterization_failures},
                {"equality", report.equality_graphs},
                {"class_counts", counts},
                {"ok", report.ok()}};
}

int cmd_verify(const Options& opt) {
    CorpusMode mode = opt.mode == "union" ? CorpusMode::UnionCorollaries
                                          : CorpusMode::ConnectedTheorems;

    CorpusSource source;
    if (opt.enumerate_n > 0) {
        std::vector<Graph> graphs;
        try {
            graphs = enumerate_connected(opt.enumerate_n);
        } catch (const UnsupportedSizeError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        auto state =
            std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
        source = [state]() -> std::optional<CorpusItem> {
            if (state->second >= state->first.size()) return std::nullopt;
            Graph g = state->first[state->second++];
            std::string g6 = encode_graph6(g);
            return CorpusItem{std::move(g), std::move(g6)};
        };
    } else {
        std::vector<std::string> lines;
        try {
            lines = read_lines(opt.input);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        auto state = std::make_shared<std::pair<std::vector<std::string>, std::size_t>>(
            std::move(lines), 0);
        source = [state]() -> std::optional<CorpusItem> {
            if (state->second >= state->first.size()) return std::nullopt;
            const std::string& line = state->first[state->second++];
            return CorpusItem{parse_graph6(line), line};
        };
    }

    RecordSink sink;
    if (opt.format == "json") {
        sink = [](const GapRatioRecord& rec) {
            json j{{"graph6", rec.graph6},
                   {"n", rec.n},
                   {"alpha", rec.alpha},
                   {"alpha_f_halves", rec.alpha_f_halves},
                   {"gap_sixths", rec.gap_sixths},
                   {"gap_ok", rec.gap_ok},
                   {"ratio_ok", rec.ratio_ok},
                   {"equality_gap", rec.equality_gap},
                   {"equality_ratio", rec.equality_ratio},
                   {"class", class_name(rec.cls)}};
            std::cout << j.dump() << "\n";
        };
    } else if (opt.format == "tsv") {
        sink = [](const GapRatioRecord& rec) {
            std::cout << rec.graph6 << '\t' << rec.n << '\t' << rec.alpha << '\t'
                      << rec.alpha_f_halves << '\t' << rec.gap_sixths << '\t' << rec.gap_ok
                      << '\t' << rec.ratio_ok << '\t' << rec.equality_gap << '\t'
                      << rec.equality_ratio << '\t' << class_name(rec.cls) << "\n";
        };
    }

    VerificationReport report;
    try {
        report = verify_corpus(source, mode, std::max(1, opt.jobs), sink);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (opt.format == "json") {
        std::cout << report_json(report, opt.mode).dump() << "\n";
    } else if (opt.format == "tsv") {
        std::cout << "# total=" << report.total
                  << " violations=" << report.bound_violations.size()
                  << " characterization_failures=" << report.characterization_failures.size()
                  << " equality=" << report.equality_graphs.size() << " ok=" << report.ok()
                  << "\n";
    } else {
        std::cout << "checked " << report.total << " graphs (" << opt.mode << " mode)\n";
        std::cout << "bound violations: " << report.bound_violations.size() << "\n";
        for (const std::string& g6 : report.bound_violations) std::cout << "  " << g6 << "\n";
        std::cout << "characterization failures: " << report.characterization_failures.size()
                  << "\n";
        for (const std::string& g6 : report.characterization_failures)
            std::cout << "  " << g6 << "\n";
        std::cout << "equality graphs: " << report.equality_graphs.size() << "\n";
        for (const std::string& g6 : report.equality_graphs) std::cout << "  " << g6 << "\n";
        std::cout << (report.ok() ? "OK" : "FAILED") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_gen(const Options& opt) {
    Graph g(0);
    if (opt.family == "triangle-star")
        g = gen_triangle_star(opt.k);
    else if (opt.family == "c5")
        g = gen_equality_small()[0];
    else if (opt.family == "k2k3")
        g = gen_equality_small()[1];
    else if (opt.family == "triangles")
        g = gen_disjoint_triangles(opt.k);
    else {
        std::cerr << "error: unknown family '" << opt.family
                  << "' (expected triangle-star, c5, k2k3 or triangles)\n";
        return 2;
    }
    std::cout << encode_graph6(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching vs fractional matching toolkit"};
    app.require_subcommand(1);
    Options opt;
    if (opt.jobs < 1) opt.jobs = 1;

    auto add_io = [&](CLI::App* sub, bool with_cap = false) {
        sub->add_option("--input", opt.input, "graph6 file, or - for stdin");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "tsv", "human"}));
        sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
        if (with_cap)
            sub->add_option("--cap", opt.cap, "subset brute-force cap")
                ->check(CLI::Range(1, kMaxWitnessCap));
    };

    CLI::App* stats = app.add_subcommand("stats", "matching numbers per input graph");
    add_io(stats);

    CLI::App* witness = app.add_subcommand("witness", "deficiency witnesses per input graph");
    add_io(witness, true);

    CLI::App* canonical =
        app.add_subcommand("canonical", "canonical optimal fractional matching per input graph");
    add_io(canonical);

    CLI::App* verify =
        app.add_subcommand("verify", "check the gap and ratio bounds over a corpus");
    add_io(verify);
    verify->add_option("--enumerate", opt.enumerate_n,
                       "use the internal connected-graph enumerator at this size")
        ->check(CLI::Range(1, 8))
        ->excludes(verify->get_option("--input"));
    verify->add_option("--mode", opt.mode, "connected or union")
        ->check(CLI::IsMember({"connected", "union"}));

    CLI::App* gen = app.add_subcommand("gen", "emit an extremal family member as graph6");
    gen->add_option("family,--family", opt.family, "triangle-star, c5, k2k3 or triangles");
    gen->add_option("k,--k", opt.k, "family parameter")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return cmd_stats(opt);
        if (witness->parsed()) return cmd_witness(opt);
        if (canonical->parsed()) return cmd_canonical(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (gen->parsed()) return cmd_gen(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
