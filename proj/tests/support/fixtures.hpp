#pragma once

#include "crossprof/geom.hpp"
#include "reference_oracle.hpp"

#include <random>

namespace fixtures {

using crossprof::Drawing;
using crossprof::Point;

inline Drawing square() { return Drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline Drawing triangle() { return Drawing({{0, 0}, {1, 0}, {0, 1}}); }

// convex hexagon with integer vertices
inline Drawing hexagon() { return Drawing({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}); }

// n random points with small rational coordinates, retried until in general position
inline Drawing random_drawing(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
    for (;;) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.emplace_back(crossprof::make_rational(num(rng), den(rng)), crossprof::make_rational(num(rng), den(rng)));
        if (crossprof::validate_general_position(pts).ok()) return Drawing::unchecked(std::move(pts));
    }
}

inline std::vector<reference::Pt> to_reference(const Drawing& d) {
    std::vector<reference::Pt> out;
    for (const auto& p : d.points())
        out.push_back({reference::from_text(p.x.get_str()), reference::from_text(p.y.get_str())});
    return out;
}

}  // namespace fixtures
