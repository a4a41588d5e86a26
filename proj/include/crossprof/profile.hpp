#pragma once

#include "crossprof/geom.hpp"

#include <cstdint>
#include <vector>

namespace crossprof {

// Sign of every ordered triple, computed once from exact integer-scaled coordinates.
class OrientationTable {
public:
    explicit OrientationTable(const Drawing& d);

    std::size_t size() const { return n_; }
    int operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return sign_[(a * n_ + b) * n_ + c];
    }

private:
    std::size_t n_;
    std::vector<std::int8_t> sign_;
};

struct EdgeCrossCounts {
    std::size_t n = 0;
    bool primed = false;
    std::vector<std::uint64_t> counts;  // indexed by edge_index

    std::uint64_t at(std::size_t u, std::size_t v) const { return counts[edge_index(u, v, n)]; }
    std::uint64_t sum() const;
};

struct CrossingProfile {
    std::size_t n = 0;
    bool primed = false;
    std::vector<std::uint64_t> e;  // e[k]; trailing zeros trimmed

    std::uint64_t e_k(std::size_t k) const { return k < e.size() ? e[k] : 0; }
    std::uint64_t s_k(std::size_t k) const;
    friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;
};

// Worker threads used by the oracle; 0 means hardware concurrency. Results do
// not depend on this value.
void set_oracle_threads(unsigned threads);
unsigned oracle_threads();

EdgeCrossCounts crossing_counts(const Drawing& d);
EdgeCrossCounts crossing_counts(const OrientationTable& o);
EdgeCrossCounts primed_counts(const Drawing& d);
EdgeCrossCounts primed_counts(const OrientationTable& o);

CrossingProfile profile_from_counts(const EdgeCrossCounts& c);
CrossingProfile crossing_profile(const Drawing& d);
CrossingProfile primed_profile(const Drawing& d);

std::uint64_t e_k(const Drawing& d, std::size_t k);
std::uint64_t s_k(const Drawing& d, std::size_t k);
std::uint64_t e_k_primed(const Drawing& d, std::size_t k);
std::uint64_t s_k_primed(const Drawing& d, std::size_t k);
std::uint64_t total_crossings(const Drawing& d);

// left[e] = points strictly left of the directed line u->v (u<v); right = n-2-left.
std::vector<std::uint32_t> left_counts(const OrientationTable& o);
std::uint64_t k_edge_count(const Drawing& d, std::size_t k);
std::uint64_t leq_k_edge_count(const Drawing& d, std::size_t k);
std::uint64_t k_edge_count(const std::vector<std::uint32_t>& left, std::size_t n, std::size_t k);
std::uint64_t leq_k_edge_count(const std::vector<std::uint32_t>& left, std::size_t n, std::size_t k);

// S_k <= n*sqrt(16.875 k) for k >= 1, checked exactly on the squared form.
bool sanity_ceiling_holds(const CrossingProfile& p);

// Running tally of every profile built through profile_from_counts.
struct CeilingAudit {
    std::uint64_t profiles = 0;
    std::uint64_t violations = 0;
};
CeilingAudit ceiling_audit();

}  // namespace crossprof
