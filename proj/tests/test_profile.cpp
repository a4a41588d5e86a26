#include "crossprof/constructions.hpp"
#include "crossprof/profile.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace crossprof;
using fixtures::hexagon;
using fixtures::square;
using fixtures::triangle;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(CrossingCounts, UnitSquare) {
    auto c = crossing_counts(square());
    EXPECT_EQ(c.at(0, 1), 0u);
    EXPECT_EQ(c.at(1, 2), 0u);
    EXPECT_EQ(c.at(0, 2), 1u);
    EXPECT_EQ(c.at(1, 3), 1u);
    EXPECT_EQ(crossing_profile(square()).e, (std::vector<std::uint64_t>{4, 2}));
    EXPECT_EQ(total_crossings(square()), 1u);
}

TEST(CrossingCounts, Hexagon) {
    auto c = crossing_counts(hexagon());
    for (std::size_t u = 0; u < 6; ++u)
        for (std::size_t v = u + 1; v < 6; ++v) {
            std::size_t a = std::min(v - u - 1, 6 - (v - u) - 1);
            EXPECT_EQ(c.at(u, v), a * (4 - a)) << u << "," << v;
        }
    auto p = crossing_profile(hexagon());
    EXPECT_EQ(p.e_k(0), 6u);
    EXPECT_EQ(p.e_k(3), 6u);
    EXPECT_EQ(p.e_k(4), 3u);
    EXPECT_EQ(p.e_k(2), 0u);
    EXPECT_EQ(p.s_k(3), 12u);
    EXPECT_EQ(total_crossings(hexagon()), 15u);
}

TEST(CrossingCounts, Triangle) {
    EXPECT_EQ(crossing_counts(triangle()).counts, (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(e_k(triangle(), 0), 3u);
}

TEST(Profile, SmallQueries) {
    EXPECT_EQ(e_k(square(), 1), 2u);
    EXPECT_EQ(s_k(square(), 0), 4u);
    EXPECT_EQ(s_k(square(), 1), 6u);
    EXPECT_EQ(e_k(square(), 99), 0u);
}

TEST(Profile, TrailingZerosTrimmed) {
    auto p = crossing_profile(triangle());
    EXPECT_EQ(p.e, (std::vector<std::uint64_t>{3}));
}

TEST(Profile, FigureOneHasTwelveUncrossedEdges) {
    EXPECT_EQ(crossing_profile(gen_max_e0(7).drawing).e_k(0), 12u);
}

TEST(Primed, Examples) {
    EXPECT_EQ(primed_counts(triangle()).counts, (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(primed_profile(square()).e, (std::vector<std::uint64_t>{4, 2}));
    EXPECT_EQ(e_k_primed(triangle(), 0), 3u);
    EXPECT_EQ(s_k_primed(square(), 1), 6u);
}

TEST(KEdges, Examples) {
    EXPECT_EQ(k_edge_count(hexagon(), 0), 6u);
    EXPECT_EQ(k_edge_count(hexagon(), 2), 3u);
    EXPECT_EQ(k_edge_count(triangle(), 0), 3u);
    EXPECT_EQ(k_edge_count(triangle(), 1), 3u);
    EXPECT_EQ(leq_k_edge_count(hexagon(), 0), 6u);
    EXPECT_EQ(leq_k_edge_count(hexagon(), 1), 12u);
    EXPECT_EQ(leq_k_edge_count(hexagon(), 2), 15u);
    for (long n = 5; n <= 12; ++n) {
        Drawing d = gen_convex(n);
        EXPECT_EQ(k_edge_count(d, 0), static_cast<std::uint64_t>(n));
        EXPECT_EQ(leq_k_edge_count(d, static_cast<std::size_t>((n - 2) / 2)), edge_total(n));
    }
}

TEST(Profile, FullRangeCoversAllEdges) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto d = fixtures::random_drawing(rng, 9);
        EXPECT_EQ(s_k(d, max_edge_crossings(9)), edge_total(9));
    }
}

TEST(Profile, ConvexTotalIsChoose4) {
    for (long n = 4; n <= 14; ++n) EXPECT_EQ(total_crossings(gen_convex(n)), choose(n, 4));
}

class RandomDrawings : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomDrawings, MatchesReferenceOracle) {
    std::mt19937_64 rng(100 + GetParam());
    for (int t = 0; t < 10; ++t) {
        auto d = fixtures::random_drawing(rng, GetParam());
        auto ref = fixtures::to_reference(d);
        EXPECT_EQ(crossing_counts(d).counts, reference::crossing_counts(ref));
        EXPECT_EQ(primed_counts(d).counts, reference::primed_counts(ref));
    }
}

TEST_P(RandomDrawings, ProfileIdentities) {
    std::mt19937_64 rng(200 + GetParam());
    const std::size_t n = GetParam();
    for (int t = 0; t < 10; ++t) {
        auto d = fixtures::random_drawing(rng, n);
        auto p = crossing_profile(d);
        std::uint64_t sum = std::accumulate(p.e.begin(), p.e.end(), std::uint64_t{0});
        std::uint64_t weighted = 0;
        for (std::size_t k = 0; k < p.e.size(); ++k) weighted += k * p.e[k];
        EXPECT_EQ(sum, edge_total(n));
        EXPECT_EQ(weighted, 2 * total_crossings(d));
        for (std::size_t k = 1; k < p.e.size(); ++k) {
            EXPECT_GE(p.s_k(k), p.s_k(k - 1));
            EXPECT_EQ(p.s_k(k), p.s_k(k - 1) + p.e_k(k));
        }
        EXPECT_TRUE(sanity_ceiling_holds(p));
        auto plain = crossing_counts(d), primed = primed_counts(d);
        for (std::size_t i = 0; i < plain.counts.size(); ++i) EXPECT_LE(plain.counts[i], primed.counts[i]);
    }
}

TEST_P(RandomDrawings, AffineInvariance) {
    std::mt19937_64 rng(300 + GetParam());
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 5; ++t) {
        auto d = fixtures::random_drawing(rng, GetParam());
        Affine f;
        do {
            f = {make_rational(coef(rng), 3), coef(rng), coef(rng), make_rational(coef(rng), 2), coef(rng), coef(rng)};
        } while (f.det() == 0);
        std::vector<Point> moved;
        for (const auto& p : d.points()) moved.push_back(f.apply(p));
        Drawing e(std::move(moved));
        EXPECT_EQ(crossing_profile(d), crossing_profile(e));
        EXPECT_EQ(primed_profile(d), primed_profile(e));
        for (std::size_t k = 0; k < GetParam(); ++k) EXPECT_EQ(k_edge_count(d, k), k_edge_count(e, k));
    }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RandomDrawings, ::testing::Values(4, 5, 7, 9, 12));

TEST(Parallelism, ResultsIndependentOfThreadCount) {
    Drawing d = gen_ek_linear(24, 9).drawing;
    set_oracle_threads(1);
    auto a = crossing_counts(d);
    auto pa = primed_counts(d);
    set_oracle_threads(4);
    auto b = crossing_counts(d);
    auto pb = primed_counts(d);
    set_oracle_threads(0);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(pa.counts, pb.counts);
}

TEST(Ceiling, AuditCountsProfiles) {
    auto before = ceiling_audit();
    crossing_profile(hexagon());
    auto after = ceiling_audit();
    EXPECT_EQ(after.profiles, before.profiles + 1);
    EXPECT_EQ(after.violations, 0u);
}

TEST(Ceiling, DetectsViolation) {
    // a fabricated profile far above the ceiling
    CrossingProfile p;
    p.n = 4;
    p.e = {0, 1000};
    EXPECT_FALSE(sanity_ceiling_holds(p));
}
