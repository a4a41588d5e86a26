#include "crossprof/blocks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crossprof {

namespace {

Rational l1(const Rational& a, const Rational& b) { return abs(a) + abs(b); }
Rational cross(const std::pair<Rational, Rational>& u, const std::pair<Rational, Rational>& v) {
    return u.first * v.second - u.second * v.first;
}

// Rational approximation of tan(x) with a power-of-two denominator.
Rational rational_tan(double x) {
    const long den = 1L << 14;
    return make_rational(std::lround(std::tan(x) * den), den);
}

}  // namespace

Point circle_point(const Rational& u) {
    Rational d = 1 + u * u;
    return {2 * u / d, (1 - u * u) / d};
}

QBlock::QBlock(long m) : m_(m), h_(make_rational(3, 5) / m), delta_(h_ / (8 * m * m)) {
    if (m < 3) throw std::domain_error("QBlock needs m >= 3");
    for (long x = 1; x <= m; ++x) {
        u_[x] = (Rational(x) - Rational(m + 1, 2)) * h_;
        u_[x].canonicalize();
        P_[x] = circle_point(u_[x]);
    }
}

std::vector<QBlock::Ray> QBlock::rays(long y, long z) const {
    y = md(y);
    z = md(z);
    std::vector<Ray> out{{Ray::P, z}};
    for (long x = md(z - 1); x != y; x = md(x - 1)) {
        out.push_back({Ray::Q, x});
        out.push_back({Ray::P, x});
    }
    out.push_back({Ray::Ext, y});
    return out;
}

void QBlock::wedge(long y, long z, long i0, std::optional<long> i1, bool designated) {
    auto list = rays(y, z);
    const long len = static_cast<long>(list.size());
    if (i0 < 0) i0 += len;
    long j1 = i1 ? *i1 : i0 + 1;
    if (j1 < 0) j1 += len;
    if (i0 < 0 || i0 >= len || j1 < 0 || j1 >= len) throw std::out_of_range("QBlock::wedge: ray index");
    if (designated) partner_[md(y)] = md(z);
    spec_.insert_or_assign(md(y), std::make_pair(list[i0], list[j1]));
}

std::pair<Rational, Rational> QBlock::direction(long y, const Ray& ray) {
    const Point& py = P_.at(y);
    Point t;
    if (ray.kind == Ray::P) t = P_.at(md(ray.x));
    else if (ray.kind == Ray::Q) t = place(ray.x);
    else {
        const Point& prev = P_.at(md(ray.x - 1));
        t = Point(2 * py.x - prev.x, 2 * py.y - prev.y);
    }
    Rational dx = t.x - py.x, dy = t.y - py.y;
    Rational n = l1(dx, dy);
    return {dx / n, dy / n};
}

const Point& QBlock::place(long y) {
    y = md(y);
    if (auto it = Q_.find(y); it != Q_.end()) return it->second;
    auto [a, b] = spec_.at(y);
    // Only the tiny wedge between Q_x and P_x keeps its Q ray; elsewhere the
    // P ray of the same index bounds the same angular range.
    bool tiny = a.kind != b.kind && a.x == b.x && a.kind != Ray::Ext && b.kind != Ray::Ext;
    if (!tiny) {
        if (a.kind == Ray::Q) a.kind = Ray::P;
        if (b.kind == Ray::Q) b.kind = Ray::P;
    }
    auto da = direction(y, a), db = direction(y, b);
    const std::pair<Rational, Rational> up{Rational(0), Rational(1)};
    if (auto pit = partner_.find(y); pit != partner_.end()) {
        Rational sw = cross(da, db);
        if (sgn(sw) != 0) {
            bool contains_up = sgn(cross(da, up)) == sgn(sw) && sgn(cross(up, db)) == sgn(sw);
            if (contains_up) {
                auto dz = direction(y, Ray{Ray::P, pit->second});
                if (sgn(cross(up, dz)) == sgn(cross(up, da))) db = up;
                else da = up;
            }
        }
    }
    const Point& py = P_.at(y);
    Point q(py.x + delta_ * (da.first + db.first), py.y + delta_ * (da.second + db.second));
    return Q_.emplace(y, std::move(q)).first->second;
}

std::vector<Point> QBlock::points() {
    std::vector<Point> out;
    for (long x = 1; x <= m_; ++x) out.push_back(P_.at(x));
    for (long x = 1; x <= m_; ++x) out.push_back(place(x));
    return out;
}

namespace {

// Four arc points ordered P_1, Q_1, P_2, Q_2 along the arc; Q_1Q_2 crosses P_1P_2.
BlockConfig small_block() {
    BlockConfig c;
    Rational s = make_rational(3, 40);
    c.points = {circle_point(-3 * s), circle_point(s), circle_point(-s), circle_point(3 * s)};
    c.designated = {{2, 3}};
    c.m = 2;
    c.j = 1;
    return c;
}

}  // namespace

BlockConfig block_case1(long m, long r) {
    if (m % 2 != 0 || r < 1 || r > 2 * m - 3) throw std::domain_error("case 1 parameters");
    if (m == 2) {
        auto c = small_block();
        c.appendix_case = 1;
        c.r = r;
        return c;
    }
    const long j = m / 2;
    QBlock b(m);
    for (long i = 1; i <= j; ++i) {
        if (r <= m - 1) {
            b.wedge(i, i + j, 0);
            b.wedge(i + j, i, r - 1);
        } else {
            b.wedge(i, i + j, r - m + 1);
            b.wedge(i + j, i, -2);
        }
    }
    BlockConfig c;
    c.points = b.points();
    for (long i = 1; i <= j; ++i) c.designated.emplace_back(b.q_index(i), b.q_index(i + j));
    c.appendix_case = 1;
    c.m = m;
    c.r = r;
    c.j = j;
    return c;
}

BlockConfig block_case2(long m, long r) {
    if (m % 2 != 1 || m < 3 || r < 2 || r > 2 * m - 3) throw std::domain_error("case 2 parameters");
    const long j = m / 2;
    QBlock b(m);
    for (long i = 1; i <= j; ++i) {
        if (r <= m - 1) {
            b.wedge(i, i + j, 0);
            b.wedge(i + j, i, r);
        } else {
            b.wedge(i, i + j, r - m + 1);
            b.wedge(i + j, i, -2);
        }
    }
    b.wedge(m, m + j, 0, -1, false);
    BlockConfig c;
    c.points = b.points();
    for (long i = 1; i <= j; ++i) c.designated.emplace_back(b.q_index(i), b.q_index(i + j));
    c.appendix_case = 2;
    c.m = m;
    c.r = r;
    c.j = j;
    return c;
}

BlockConfig block_case3(long m) {
    if (m % 2 != 1 || m < 3) throw std::domain_error("case 3 parameters");
    const long mp = m - 1, j = mp / 2;
    BlockConfig base = block_case1(mp, mp - 1);
    BlockConfig c;
    c.points = base.points;
    // A on the arc midway between P_1 and P_2 of the (m-1)-block
    if (mp == 2) c.points.push_back(circle_point(Rational(0)));
    else {
        Rational h = make_rational(3, 5) / mp;
        Rational u1 = (Rational(1) - Rational(mp + 1, 2)) * h;
        c.points.push_back(circle_point(u1 + h / 2));
    }
    for (long i = 2; i <= j - 1; ++i)
        c.designated.emplace_back(static_cast<std::size_t>(mp + i - 1), static_cast<std::size_t>(mp + (i + j - 1) % mp));
    c.appendix_case = 3;
    c.m = m;
    c.r = 1;
    c.j = m / 2;
    return c;
}

BlockConfig block_case4(long m) {
    if (m % 2 != 1 || m < 3) throw std::domain_error("case 4 parameters");
    BlockConfig c;
    c.points = arc_block(2 * m);
    for (long i = 1; i <= m; ++i) c.designated.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i + m - 1));
    c.appendix_case = 4;
    c.m = m;
    c.r = 2 * m - 3;
    c.j = m / 2;
    return c;
}

BlockConfig block_case6(long M, long d) {
    if (M % 2 != 0 || d < 0 || d > M - 2) throw std::domain_error("case 6 parameters");
    const long j = M / 2;
    BlockConfig base = block_case1(M, (M - 1) + d);
    BlockConfig c;
    c.points = base.points;
    c.points.emplace_back(0, 0);
    for (long i = 1; i <= j - 1; ++i) c.designated.push_back(base.designated[static_cast<std::size_t>(i - 1)]);
    c.appendix_case = 6;
    c.m = M;
    c.r = (M - 1) + d;
    c.j = j;
    return c;
}

BlockConfig block_case7(long M, long d) {
    if (M % 2 != 1 || M < 3 || d < 0 || d > M - 3) throw std::domain_error("case 7 parameters");
    const long j = M / 2;
    QBlock b(M);
    for (long i = j + 2; i <= 2 * j; ++i) {
        b.wedge(i, i + j, -2);
        b.wedge(i + j, i, d + 2);
    }
    for (long y : {j, j + 1, 2 * j + 1}) b.wedge(y, y + j, 0, -1, false);
    BlockConfig c;
    c.points = b.points();
    c.points.emplace_back(0, 0);
    for (long i = j + 2; i <= 2 * j; ++i) c.designated.emplace_back(b.q_index(i), b.q_index(i + j));
    c.appendix_case = 7;
    c.m = M;
    c.r = d;
    c.j = j;
    return c;
}

BlockConfig block_case8(long M) {
    if (M % 2 != 1 || M < 3) throw std::domain_error("case 8 parameters");
    BlockConfig c;
    if (M == 3) {
        // The wedge recipe needs rays that do not exist for m = 3; a searched
        // 7-point configuration with (m-1)^2+1 = 5 crossings on edge (0,5).
        c.points = {{-33, 22}, {47, -42}, {-18, -35}, {13, 47}, {7, 10}, {33, -2}, {50, -24}};
        c.designated = {{0, 5}};
    } else {
        BlockConfig base = block_case2(M, M);
        c.points = base.points;
        c.points.emplace_back(0, 0);
        c.designated = base.designated;
    }
    c.appendix_case = 8;
    c.m = M;
    c.r = M;
    c.j = M / 2;
    return c;
}

BlockConfig block_for(long m, long r) {
    if (m % 2 == 0) return block_case1(m, r);
    if (r == 1) return block_case3(m);
    if (r == 2 * m - 3) return block_case4(m);
    return block_case2(m, r);
}

std::vector<Point> arc_block(long count) {
    std::vector<Point> out;
    Rational h = make_rational(3, 5) / count;
    for (long x = 1; x <= count; ++x) out.push_back(circle_point((Rational(x) - Rational(count + 1, 2)) * h));
    return out;
}

TiledDrawing tile_blocks(const std::vector<Point>& block,
                         const std::vector<std::pair<std::size_t, std::size_t>>& designated,
                         long t, long n, const Rational& eps) {
    TiledDrawing out;
    out.block_size = block.size();
    out.tiles = t;
    Rational xmax = 0;
    for (const auto& p : block) xmax = std::max(xmax, Rational(abs(p.x)));
    const Rational xscale = make_rational(9, 10) / xmax;
    const double pi = std::numbers::pi;
    const double half_width = std::min(0.3 * 2 * pi / static_cast<double>(t), pi / 4);
    for (long i = 0; i < t; ++i) {
        double centre = -pi + 2 * pi * (static_cast<double>(i) + 0.5) / static_cast<double>(t);
        Point A = circle_point(rational_tan((centre - half_width) / 2));
        Point B = circle_point(rational_tan((centre + half_width) / 2));
        Point M((A.x + B.x) / 2, (A.y + B.y) / 2);
        Rational hx = (B.x - A.x) / 2, hy = (B.y - A.y) / 2;
        Rational nx = -hy, ny = hx;
        if (sgn(nx * (-M.x) + ny * (-M.y)) < 0) {
            nx = -nx;
            ny = -ny;
        }
        const std::size_t base = out.points.size();
        for (const auto& p : block) {
            Rational X = p.x * xscale, Y = (p.y - 1) * eps;
            out.points.emplace_back(M.x + X * hx + Y * nx, M.y + X * hy + Y * ny);
        }
        for (auto [a, b] : designated) out.designated.emplace_back(base + a, base + b);
    }
    const long left = n - static_cast<long>(out.points.size());
    if (left < 0) throw std::domain_error("tile_blocks: blocks exceed n");
    Rational s = eps / (64 * n);
    for (long q = 1; q <= left; ++q) out.points.emplace_back(s * q, s * s * q * q);
    return out;
}

}  // namespace crossprof
