#pragma once

#include "crossprof/geom.hpp"
#include "crossprof/profile.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace crossprof {

std::set<std::uint64_t> t_set(long m);
CrossingProfile convex_profile(long n);
std::uint64_t max_edge_crossings(long n);

struct MkDecomposition {
    long k = 0;
    long m = 0;
    long r = 0;
};
MkDecomposition mk_decompose(long k);

// Arc numbering for D_{a,b,c}: upper and lower left to right, third top to bottom.
enum class Arc { Upper, Lower, Third };

struct ArcVertex {
    Arc arc;
    long pos;  // 1-based
};

struct ArcSizes {
    long a = 0, b = 0, c = 0;
    long size(Arc arc) const { return arc == Arc::Upper ? a : arc == Arc::Lower ? b : c; }
    long total() const { return a + b + c; }
};

// D(i,j) = D_{floor(n/2)-i, ceil(n/2)-j, i+j}
ArcSizes dij_sizes(long n, long i, long j);

// Predicted crossing count of the edge xy in D_{a,b,c}.
std::int64_t three_arc_predict(const ArcSizes& s, ArcVertex x, ArcVertex y);
std::int64_t dij_predict(long n, long i, long j, ArcVertex x, ArcVertex y);

// Vertex order used by the realization: upper arc, then lower, then third.
ArcVertex arc_vertex_of(const ArcSizes& s, std::size_t index);

struct PredictionMismatch {
    EdgeId edge;
    std::int64_t predicted;
    std::int64_t observed;
};

struct PredictionReport {
    std::vector<std::int64_t> predicted;
    std::vector<std::int64_t> observed;
    std::vector<PredictionMismatch> mismatches;
    bool verified() const { return mismatches.empty(); }
};

PredictionReport predict_three_arc(const ArcSizes& s, const EdgeCrossCounts& observed);

std::int64_t dab_interarc_bound(long a, long b);
long tau(long k);

struct MinSkBound {
    double value = 0;
    std::string regime;
};
MinSkBound minSk_bound(long n, long k);

}  // namespace crossprof
