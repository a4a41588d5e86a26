#pragma once
// Second crossing-count implementation for cross-checking the library oracle.
// Shares nothing with the library: boost rationals, direct four-orientation test.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reference {

using Q = boost::multiprecision::cpp_rational;

struct Pt {
    Q x, y;
};

inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    Q v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

inline bool cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// counts[e] for edges enumerated as (u,v), u<v, lexicographic
inline std::vector<std::uint64_t> crossing_counts(const std::vector<Pt>& p) {
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<std::uint64_t> out(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (cross(p[a], p[b], p[c], p[d])) {
                ++out[i];
                ++out[j];
            }
        }
    return out;
}

// line through (c,d) meets the open segment (a,b) in one point
inline std::vector<std::uint64_t> primed_counts(const std::vector<Pt>& p) {
    const std::size_t n = p.size();
    std::vector<std::uint64_t> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::uint64_t c = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v) {
                    if (u == a && v == b) continue;
                    if (orient(p[u], p[v], p[a]) * orient(p[u], p[v], p[b]) < 0) ++c;
                }
            out.push_back(c);
        }
    return out;
}

inline Q from_text(const std::string& s) { return Q(s); }

}  // namespace reference
