#pragma once

#include "crossprof/geom.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace crossprof {

// Point on the unit circle with rational parameter u (tangent half-angle form).
Point circle_point(const Rational& u);

// Configuration of P_1..P_m on a flat arc of the unit circle near (0,1) and
// Q_1..Q_m placed inside ray wedges at P_1..P_m. Outside points are assumed to
// lie far in the +y direction once the block is tiled.
class QBlock {
public:
    struct Ray {
        enum Kind { P, Q, Ext } kind;
        long x;
    };

    explicit QBlock(long m);

    long m() const { return m_; }
    long md(long x) const { return ((x - 1) % m_ + m_) % m_ + 1; }
    const Rational& u(long x) const { return u_.at(md(x)); }

    // R(y,z): P_z, Q_{z-1}, P_{z-1}, ..., Q_{y+1}, P_{y+1}, ext_y (indices mod m).
    std::vector<Ray> rays(long y, long z) const;

    // Q_y goes between rays(y,z)[i0] and rays(y,z)[i1]; negative indices count
    // from the end, and i1 defaults to i0+1. `designated` records z as the
    // partner of y.
    void wedge(long y, long z, long i0, std::optional<long> i1 = std::nullopt, bool designated = true);

    // P_1..P_m then Q_1..Q_m.
    std::vector<Point> points();
    std::size_t p_index(long x) const { return static_cast<std::size_t>(md(x) - 1); }
    std::size_t q_index(long x) const { return static_cast<std::size_t>(m_ + md(x) - 1); }

private:
    std::pair<Rational, Rational> direction(long y, const Ray& ray);
    const Point& place(long y);

    long m_;
    Rational h_, delta_;
    std::map<long, Rational> u_;
    std::map<long, Point> P_, Q_;
    std::map<long, std::pair<Ray, Ray>> spec_;
    std::map<long, long> partner_;
};

struct BlockConfig {
    std::vector<Point> points;  // block frame: arc near (0,1), bulging towards +y
    std::vector<std::pair<std::size_t, std::size_t>> designated;
    int appendix_case = 0;
    long m = 0;
    long r = 0;
    long j = 0;
};

BlockConfig block_case1(long m, long r);
BlockConfig block_case2(long m, long r);
BlockConfig block_case3(long m);
BlockConfig block_case4(long m);
BlockConfig block_case6(long M, long d);
BlockConfig block_case7(long M, long d);
BlockConfig block_case8(long M);

// Block for Theorem-style even-n cases 1-4 chosen from (m, r).
BlockConfig block_for(long m, long r);

// Convex block of `count` points on the same flat arc.
std::vector<Point> arc_block(long count);

struct TiledDrawing {
    std::vector<Point> points;
    std::vector<std::pair<std::size_t, std::size_t>> designated;
    std::size_t block_size = 0;
    long tiles = 0;
};

// t copies of the block on chords A_iB_i of the unit circle, each flattened by
// eps towards the centre; leftovers up to n in a small convex cluster at the centre.
TiledDrawing tile_blocks(const std::vector<Point>& block,
                         const std::vector<std::pair<std::size_t, std::size_t>>& designated,
                         long t, long n, const Rational& eps);

}  // namespace crossprof
