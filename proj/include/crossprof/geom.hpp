#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossprof {

// Exact fraction. mpq_class keeps numerator/denominator canonical after every
// operation (denominator > 0, gcd 1).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(long x_, long y_) : x(x_), y(y_) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);
int orientation_sign(const Point& p, const Point& q, const Point& r);

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);
bool line_crosses_open_segment(const Point& p, const Point& q, const Point& a, const Point& b);

struct EdgeId {
    std::size_t u = 0;
    std::size_t v = 0;

    EdgeId() = default;
    EdgeId(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Canonical lexicographic index of {u,v}, u<v, among the n(n-1)/2 pairs.
std::size_t edge_index(std::size_t u, std::size_t v, std::size_t n);
EdgeId edge_at(std::size_t index, std::size_t n);
inline std::size_t edge_total(std::size_t n) { return n * (n - 1) / 2; }

struct GeneralPositionReport {
    enum class Kind { Ok, Duplicate, Collinear, Empty };
    Kind kind = Kind::Ok;
    std::vector<std::size_t> indices;

    bool ok() const { return kind == Kind::Ok; }
    std::string describe() const;
};

GeneralPositionReport validate_general_position(const std::vector<Point>& pts);

class GeneralPositionError : public std::runtime_error {
public:
    explicit GeneralPositionError(GeneralPositionReport r)
        : std::runtime_error(r.describe()), report(std::move(r)) {}
    GeneralPositionReport report;
};

// Ordered point set in general position; vertex id = index.
class Drawing {
public:
    Drawing() = default;
    explicit Drawing(std::vector<Point> pts);  // throws GeneralPositionError

    static Drawing unchecked(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    friend bool operator==(const Drawing& a, const Drawing& b) { return a.pts_ == b.pts_; }

private:
    std::vector<Point> pts_;
};

struct Affine {
    Rational a, b, c, d, tx, ty;  // (x,y) -> (a x + b y + tx, c x + d y + ty)
    Point apply(const Point& p) const;
    Rational det() const { return a * d - b * c; }
};

}  // namespace crossprof
