#pragma once

#include "crossprof/constructions.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossprof {

// An arc family D_{a,b,c}; c = 0 is the two-arc family D_{a,b}.
struct ArcFamily {
    long a = 0, b = 0, c = 0;
    std::string tier;  // "convex", "near-convex", "two-arc", "dij"
    long i = 0, j = 0; // D(i,j) coordinates when tier == "dij"

    std::string label() const;
    ArcSizes sizes() const { return {a, b, c}; }
};

struct ScreenEntry {
    enum class Verdict { RejectedAnalytic, RejectedOracle, Certified };
    ArcFamily family;
    Verdict verdict = Verdict::Certified;
    std::optional<EdgeId> offending;  // an edge with exactly k crossings
    bool audited = false;             // rejection confirmed by the oracle
    std::string describe() const;
};

struct ZeroSearchResult {
    Drawing witness;
    ArcFamily family;
    std::vector<ScreenEntry> trace;
};

struct ZeroSearchOptions {
    bool screen = true;  // false: every candidate goes straight to the oracle
    bool audit = false;  // oracle-check every analytic rejection
};

class SearchExhausted : public std::runtime_error {
public:
    SearchExhausted(const std::string& what, std::vector<ScreenEntry> trace)
        : std::runtime_error(what), trace(std::move(trace)) {}
    std::vector<ScreenEntry> trace;
};

// Candidate families in tier order.
std::vector<ArcFamily> zero_search_families(long n, long k);

// Throws SearchExhausted when no candidate certifies, std::invalid_argument on bad input.
ZeroSearchResult find_zero_ek(long n, long k, const ZeroSearchOptions& opts = {});

// Crossing counts of the realized family drawing, memoised per (a,b,c).
const EdgeCrossCounts& family_counts(const ArcFamily& f);
Drawing family_drawing(const ArcFamily& f);

// ---------------------------------------------------------------------------

enum class Metric { Ek, Sk, SkPrimed, KEdges, LeqKEdges, VertexPrimedLeqK };

std::string metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& s);

struct SweepConfig {
    std::vector<ConstructionKind> families;
    std::vector<long> ns;
    std::vector<long> ks;
    std::vector<std::pair<long, long>> cells;  // extra (n, k) pairs beyond ns x ks
    std::vector<Metric> metrics;
    double budget_seconds = 0;  // 0 = unlimited
};

struct SweepCell {
    ConstructionKind family;
    long n = 0, k = 0;
    Metric metric;
    std::uint64_t value = 0;
    bool measured = false;
    std::string note;  // reason when not measured
    double bound = 0;  // minSk_bound value at (n, k)
};

struct FittedConstant {
    ConstructionKind family;
    Metric metric;
    double constant = 0;  // exp of the mean log residual
    double min_ratio = 0, max_ratio = 0;
    std::size_t cells = 0;
};

struct SweepReport {
    std::vector<SweepCell> cells;
    std::vector<FittedConstant> fits;
    bool complete = true;
};

SweepReport extremal_sweep(const SweepConfig& config);

// Measures one metric on a drawing.
std::uint64_t measure(const Drawing& d, Metric metric, long k);

}  // namespace crossprof
