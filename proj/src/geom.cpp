#include "crossprof/geom.hpp"

#include <sstream>

namespace crossprof {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int orientation_sign(const Point& p, const Point& q, const Point& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    return static_cast<Orientation>(orientation_sign(p, q, r));
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation_sign(a, b, c), o2 = orientation_sign(a, b, d);
    int o3 = orientation_sign(c, d, a), o4 = orientation_sign(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool line_crosses_open_segment(const Point& p, const Point& q, const Point& a, const Point& b) {
    return orientation_sign(p, q, a) * orientation_sign(p, q, b) < 0;
}

std::size_t edge_index(std::size_t u, std::size_t v, std::size_t n) {
    if (u > v) std::swap(u, v);
    // pairs before row u: sum_{i<u} (n-1-i)
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

EdgeId edge_at(std::size_t index, std::size_t n) {
    std::size_t u = 0;
    while (index >= n - 1 - u) {
        index -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + index};
}

std::string GeneralPositionReport::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Ok: os << "ok"; break;
    case Kind::Empty: os << "empty drawing"; break;
    case Kind::Duplicate: os << "duplicate points " << indices[0] << " and " << indices[1]; break;
    case Kind::Collinear:
        os << "collinear triple (" << indices[0] << ", " << indices[1] << ", " << indices[2] << ")";
        break;
    }
    return os.str();
}

GeneralPositionReport validate_general_position(const std::vector<Point>& pts) {
    GeneralPositionReport rep;
    const std::size_t n = pts.size();
    if (n == 0) {
        rep.kind = GeneralPositionReport::Kind::Empty;
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) {
                rep.kind = GeneralPositionReport::Kind::Duplicate;
                rep.indices = {i, j};
                return rep;
            }
    Rational dx, dy, det;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            dx = pts[j].x - pts[i].x;
            dy = pts[j].y - pts[i].y;
            for (std::size_t k = j + 1; k < n; ++k) {
                det = dx * (pts[k].y - pts[i].y) - dy * (pts[k].x - pts[i].x);
                if (sgn(det) == 0) {
                    rep.kind = GeneralPositionReport::Kind::Collinear;
                    rep.indices = {i, j, k};
                    return rep;
                }
            }
        }
    return rep;
}

Drawing::Drawing(std::vector<Point> pts) : pts_(std::move(pts)) {
    auto rep = validate_general_position(pts_);
    if (!rep.ok()) throw GeneralPositionError(rep);
}

Drawing Drawing::unchecked(std::vector<Point> pts) {
    Drawing d;
    d.pts_ = std::move(pts);
    return d;
}

Point Affine::apply(const Point& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
}

}  // namespace crossprof
