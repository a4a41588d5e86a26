#include "crossprof/geom.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace crossprof;

TEST(Orientation, BasicTurns) {
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::CounterClockwise);
    EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), Orientation::Collinear);
    EXPECT_EQ(orientation({0, 0}, {2, 0}, {1, -1}), Orientation::Clockwise);
}

TEST(Orientation, ExactForTinyRationals) {
    Rational e = make_rational(1, 1000000007);
    e *= e;
    EXPECT_EQ(orientation({0, 0}, {1, 0}, Point(Rational(1, 2), e)), Orientation::CounterClockwise);
    EXPECT_EQ(orientation({0, 0}, {1, 0}, Point(Rational(1, 2), -e)), Orientation::Clockwise);
}

TEST(Orientation, AntisymmetricUnderSwap) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto d = fixtures::random_drawing(rng, 3);
        EXPECT_EQ(orientation_sign(d[0], d[1], d[2]), -orientation_sign(d[1], d[0], d[2]));
        EXPECT_EQ(orientation_sign(d[0], d[1], d[2]), orientation_sign(d[1], d[2], d[0]));
    }
}

TEST(SegmentsCross, Examples) {
    EXPECT_TRUE(segments_cross_properly({0, 0}, {1, 1}, {0, 1}, {1, 0}));
    EXPECT_FALSE(segments_cross_properly({0, 0}, {1, 0}, {1, 0}, {2, 1}));
    EXPECT_FALSE(segments_cross_properly({0, 0}, {1, 0}, {0, 1}, {1, 1}));
}

TEST(LineCrossesOpenSegment, Examples) {
    EXPECT_TRUE(line_crosses_open_segment({0, 0}, {1, 0}, {1, -1}, {1, 1}));
    EXPECT_FALSE(line_crosses_open_segment({0, 0}, {1, 1}, {1, 1}, {2, 0}));
    EXPECT_FALSE(line_crosses_open_segment({0, 0}, {1, 0}, {0, 1}, {1, 2}));
}

TEST(GeneralPosition, Examples) {
    EXPECT_TRUE(validate_general_position({{0, 0}, {1, 0}, {0, 1}}).ok());

    auto col = validate_general_position({{0, 0}, {1, 1}, {2, 2}, {0, 5}});
    EXPECT_EQ(col.kind, GeneralPositionReport::Kind::Collinear);
    EXPECT_EQ(col.indices, (std::vector<std::size_t>{0, 1, 2}));

    auto dup = validate_general_position({{0, 0}, {0, 0}});
    EXPECT_EQ(dup.kind, GeneralPositionReport::Kind::Duplicate);
    EXPECT_EQ(dup.indices, (std::vector<std::size_t>{0, 1}));

    EXPECT_EQ(validate_general_position({}).kind, GeneralPositionReport::Kind::Empty);
}

TEST(GeneralPosition, DrawingConstructorThrows) {
    EXPECT_THROW(Drawing({{0, 0}, {1, 1}, {2, 2}}), GeneralPositionError);
    EXPECT_NO_THROW(Drawing({{0, 0}, {1, 1}, {2, 3}}));
}

TEST(EdgeIndex, RoundTrip) {
    for (std::size_t n : {2u, 3u, 7u, 20u}) {
        std::size_t idx = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v, ++idx) {
                EXPECT_EQ(edge_index(u, v, n), idx);
                EXPECT_EQ(edge_at(idx, n), EdgeId(u, v));
            }
        EXPECT_EQ(idx, edge_total(n));
    }
}

TEST(EdgeId, Normalises) {
    EdgeId e(5, 2);
    EXPECT_EQ(e.u, 2u);
    EXPECT_EQ(e.v, 5u);
}

TEST(Affine, ApplyAndDeterminant) {
    Affine f{2, 1, 0, 3, 5, -1};
    Point p = f.apply({1, 2});
    EXPECT_EQ(p, Point(9, 5));
    EXPECT_EQ(f.det(), 6);
}

TEST(RationalText, Canonical) {
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
}

TEST(SegmentsCross, SymmetricAndConsistentWithOrientation) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        auto d = fixtures::random_drawing(rng, 4);
        bool c = segments_cross_properly(d[0], d[1], d[2], d[3]);
        EXPECT_EQ(c, segments_cross_properly(d[2], d[3], d[0], d[1]));
        EXPECT_EQ(c, segments_cross_properly(d[1], d[0], d[3], d[2]));
        if (c) {
            EXPECT_NE(orientation(d[0], d[1], d[2]), orientation(d[0], d[1], d[3]));
            EXPECT_NE(orientation(d[2], d[3], d[0]), orientation(d[2], d[3], d[1]));
        }
    }
}

// With Y, Z on one side of line WX, one of the lines WY, WZ splits the other pair.
TEST(LineCrossesOpenSegment, XyzwProperty) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 10000) {
        auto d = fixtures::random_drawing(rng, 4);
        const Point &X = d[0], &Y = d[1], &Z = d[2], &W = d[3];
        if (orientation_sign(W, X, Y) != orientation_sign(W, X, Z)) continue;
        ++checked;
        EXPECT_TRUE(line_crosses_open_segment(W, Y, X, Z) || line_crosses_open_segment(W, Z, X, Y));
    }
}
