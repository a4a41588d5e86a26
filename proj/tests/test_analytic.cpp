#include "crossprof/analytic.hpp"
#include "crossprof/constructions.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace crossprof;

TEST(TSet, Examples) {
    EXPECT_EQ(t_set(6), (std::set<std::uint64_t>{3, 4}));
    EXPECT_EQ(t_set(10), (std::set<std::uint64_t>{7, 12, 15, 16}));
    EXPECT_TRUE(t_set(3).empty());
    EXPECT_THROW(t_set(1), std::domain_error);
}

TEST(TSet, MatchesRealisedConvexSupport) {
    for (long m = 3; m <= 16; ++m) {
        auto p = crossing_profile(gen_convex(m));
        std::set<std::uint64_t> support;
        for (std::size_t k = 1; k < p.e.size(); ++k)
            if (p.e[k]) support.insert(k);
        EXPECT_EQ(support, t_set(m)) << m;
    }
}

TEST(ConvexProfile, Examples) {
    EXPECT_EQ(convex_profile(4).e, (std::vector<std::uint64_t>{4, 2}));
    auto p6 = convex_profile(6);
    EXPECT_EQ(p6.e_k(0), 6u);
    EXPECT_EQ(p6.e_k(3), 6u);
    EXPECT_EQ(p6.e_k(4), 3u);
    auto p7 = convex_profile(7);
    EXPECT_EQ(p7.e_k(0), 7u);
    EXPECT_EQ(p7.e_k(4), 7u);
    EXPECT_EQ(p7.e_k(6), 7u);
    EXPECT_THROW(convex_profile(2), std::domain_error);
}

TEST(ConvexProfile, MatchesOracle) {
    for (long n = 3; n <= 24; ++n) EXPECT_EQ(convex_profile(n), crossing_profile(gen_convex(n))) << n;
}

TEST(MaxEdgeCrossings, Examples) {
    EXPECT_EQ(max_edge_crossings(4), 1u);
    EXPECT_EQ(max_edge_crossings(12), 25u);
    EXPECT_EQ(max_edge_crossings(7), 6u);
    EXPECT_EQ(max_edge_crossings(7), convex_profile(7).e.size() - 1);
}

TEST(MkDecompose, Examples) {
    auto a = mk_decompose(19);
    EXPECT_EQ(a.m, 6);
    EXPECT_EQ(a.r, 3);
    auto b = mk_decompose(23);
    EXPECT_EQ(b.m, 6);
    EXPECT_EQ(b.r, 7);
    auto c = mk_decompose(1);
    EXPECT_EQ(c.m, 2);
    EXPECT_EQ(c.r, 1);
}

TEST(MkDecompose, InverseOnDomain) {
    for (long k = 1; k <= 5000; ++k) {
        auto d = mk_decompose(k);
        EXPECT_EQ((d.m - 2) * (d.m - 2) + d.r, k);
        EXPECT_GE(d.r, 1);
        EXPECT_LE(d.r, 2 * d.m - 3);
    }
}

TEST(DijPredict, Examples) {
    auto s = dij_sizes(60, 1, 1);
    EXPECT_EQ(s.a, 29);
    EXPECT_EQ(s.b, 29);
    EXPECT_EQ(s.c, 2);
    EXPECT_EQ(dij_predict(60, 1, 1, {Arc::Upper, 1}, {Arc::Lower, 1}), 0);
    EXPECT_EQ(dij_predict(60, 1, 1, {Arc::Upper, 2}, {Arc::Lower, 1}), 30);
    // (a-1)(b+c-1) with a = b = 29, c = 2
    EXPECT_EQ(dij_predict(60, 1, 1, {Arc::Upper, 1}, {Arc::Third, 1}), 840);
    EXPECT_THROW(dij_predict(60, 1, 1, {Arc::Upper, 30}, {Arc::Lower, 1}), std::domain_error);
    EXPECT_THROW(dij_predict(60, 1, 1, {Arc::Third, 3}, {Arc::Lower, 1}), std::domain_error);
}

TEST(DijPredict, MatchesOracleOnRealisedDrawings) {
    for (auto [n, i, j] : {std::tuple{20L, 1L, 1L}, {21, 1, 2}, {24, 2, 2}, {25, 2, 1}, {30, 1, 3}}) {
        ArcSizes s = dij_sizes(n, i, j);
        auto g = gen_three_arc(s.a, s.b, s.c);
        auto rep = predict_three_arc(s, crossing_counts(g.drawing));
        EXPECT_TRUE(rep.verified()) << n << " " << i << " " << j;
        EXPECT_EQ(rep.predicted.size(), edge_total(n));
    }
}

TEST(DijPredict, TwoArcFamilies) {
    for (auto [a, b] : {std::pair{3L, 9L}, {1, 11}, {6, 6}, {0, 10}}) {
        auto g = gen_two_arc(a, b);
        EXPECT_TRUE(predict_three_arc({a, b, 0}, crossing_counts(g.drawing)).verified()) << a << "," << b;
    }
}

TEST(DabInterarcBound, Examples) {
    EXPECT_EQ(dab_interarc_bound(1, 9), 0);
    EXPECT_EQ(dab_interarc_bound(3, 4), 6);
    EXPECT_THROW(dab_interarc_bound(0, 4), std::domain_error);
}

TEST(Tau, Examples) {
    EXPECT_EQ(tau(1), 1);
    EXPECT_EQ(tau(12), 6);
    EXPECT_EQ(tau(360), 24);
    EXPECT_THROW(tau(0), std::domain_error);
}

TEST(MinSkBound, Regimes) {
    auto a = minSk_bound(100, 50);
    EXPECT_EQ(a.regime, "k <= n");
    EXPECT_DOUBLE_EQ(a.value, 1.0);
    auto b = minSk_bound(100, 500);
    EXPECT_EQ(b.regime, "n<k<=n^{3/2}");
    EXPECT_NEAR(b.value, 25 * std::log(5.0), 1e-9);
    auto c = minSk_bound(100, 2000);
    EXPECT_EQ(c.regime, "n^{3/2}<k");
    EXPECT_NEAR(c.value, 400 * std::log(5.0), 1e-9);
}
