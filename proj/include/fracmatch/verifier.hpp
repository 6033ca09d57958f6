#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracmatch/fractional.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/matching.hpp"

namespace fracmatch {

enum class ExtremalClass {
    NotExtremal,
    C5Type,             // n = 5, connected, contains a 5-cycle
    K2K3Type,           // n = 5, connected, contains a triangle plus a disjoint edge
    TriangleStar,       // some vertex leaves only triangles plus one singleton
    DisjointTriangles,  // every component is K3
};

std::string to_string(ExtremalClass c);

/// Which pair of bounds a record's flags encode: the sharp connected-graph
/// bounds gap <= (n-2)/6 and ratio <= 3n/(2n+2), or the coarse any-graph
/// bounds gap <= n/6 and ratio <= 3/2.
enum class BoundForm { Sharp, Coarse };

/// Per-graph verdict. All quantities are exact integers: alpha_f_halves is
/// 2*alpha'_f and gap_sixths is 6*(alpha'_f - alpha'), so every bound and
/// equality test is an integer comparison.
struct GapRatioRecord {
    std::string graph6;
    int n = 0;
    int alpha = 0;
    int alpha_f_halves = 0;
    int gap_sixths = 0;
    bool gap_ok = false;
    bool ratio_ok = false;
    bool equality_gap = false;
    bool equality_ratio = false;
    ExtremalClass cls = ExtremalClass::NotExtremal;
};

/// Computes matching numbers and bound flags for one graph. The caller fills
/// graph6 (the encoder only covers n <= 62).
GapRatioRecord evaluate(const Graph& g, BoundForm form = BoundForm::Sharp);

ExtremalClass classify_extremal(const Graph& g);

/// Which branch of the gap-bound argument a graph lands in, determined by
/// the tie-broken deficiency witness S: S empty, no isolated vertices in
/// G-S, or at least one isolated vertex.
enum class GapCase { EmptyWitness, NoIsolatedVertices, IsolatedVertices };

/// Re-derivation of the gap bound for one graph: fetches the witness,
/// measures x (isolated components), y (odd components with >= 3 vertices),
/// and checks every intermediate inequality of the applicable branch.
/// chain_holds must be true on every input; a false value would falsify the
/// bound's derivation and is reported step by step in failures.
struct GapCertificate {
    GapCase case_id = GapCase::EmptyWitness;
    VertexSet witness;
    int x = 0;
    int y = 0;
    int deficiency = 0;
    int frac_deficiency = 0;
    int gap_sixths = 0;
    bool chain_holds = false;
    std::vector<std::string> failures;
};

/// Branches of the ratio-bound argument, keyed by the canonical statistics.
/// Case 2 (unweighted vertices but no full edge) is impossible for a
/// connected graph with a canonical optimal matching; reaching it throws
/// std::logic_error.
struct RatioCertificate {
    int case_number = 0;  // 1, 3 or 4
    CanonicalStats stats;
    int c_total = 0;
    int cycle_i = 0;  // the unique cycle half-length in case 1
    int alpha = 0;
    int alpha_f_halves = 0;
    bool chain_holds = false;
    std::vector<std::string> failures;
};

/// Requires g connected with n >= 5. The gap certificate runs the exhaustive
/// witness search, so g must also fit under the subset cap.
GapCertificate case_certificate_gap(const Graph& g, int witness_cap = kDefaultWitnessCap);
RatioCertificate case_certificate_ratio(const Graph& g);

enum class CorpusMode { ConnectedTheorems, UnionCorollaries };

struct CorpusItem {
    Graph graph;
    std::string graph6;
};

/// Pull-based graph stream; returns nullopt at end of input.
using CorpusSource = std::function<std::optional<CorpusItem>()>;
/// Receives records in input order.
using RecordSink = std::function<void(const GapRatioRecord&)>;

struct VerificationReport {
    long long total = 0;
    std::vector<std::string> bound_violations;
    std::vector<std::string> characterization_failures;
    std::vector<std::string> equality_graphs;
    std::map<ExtremalClass, long long> class_counts;
    bool ok() const { return bound_violations.empty() && characterization_failures.empty(); }
};

/// Runs the per-graph checks over a corpus with `jobs` workers and
/// aggregates. Connected mode requires every graph connected; graphs with
/// n >= 5 are held to the sharp bounds with equality expected exactly on
/// the C5/K2+K3 classes (n = 5) or triangle stars (n >= 6), smaller ones to
/// the coarse bounds with equality expected exactly on disjoint triangles.
/// Union mode requires at least one edge per graph and applies the coarse
/// bounds throughout. Output is byte-identical for any worker count.
VerificationReport verify_corpus(const CorpusSource& source, CorpusMode mode, int jobs = 1,
                                 const RecordSink& sink = nullptr);

/// Expected equality classes for a graph under the given mode.
bool is_expected_equality_class(ExtremalClass cls, int n, CorpusMode mode);

}  // namespace fracmatch
