#include "crossprof/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace crossprof {

std::set<std::uint64_t> t_set(long m) {
    if (m < 2) throw std::domain_error("t_set: m must be at least 2");
    std::set<std::uint64_t> out;
    for (long a = 1; a <= (m - 2) / 2; ++a) out.insert(static_cast<std::uint64_t>(a * ((m - 2) - a)));
    return out;
}

CrossingProfile convex_profile(long n) {
    if (n < 3) throw std::domain_error("convex_profile: n must be at least 3");
    CrossingProfile p;
    p.n = static_cast<std::size_t>(n);
    auto bump = [&](std::uint64_t k, std::uint64_t by) {
        if (k >= p.e.size()) p.e.resize(k + 1, 0);
        p.e[k] += by;
    };
    // a chord with a points on one side: a(n-2-a) crossings; n chords per split,
    // n/2 for the halving split
    for (long a = 0; 2 * a < n - 2; ++a) bump(static_cast<std::uint64_t>(a * (n - 2 - a)), n);
    if (n % 2 == 0) {
        long a = (n - 2) / 2;
        bump(static_cast<std::uint64_t>(a * a), n / 2);
    }
    return p;
}

std::uint64_t max_edge_crossings(long n) {
    if (n < 2) throw std::domain_error("max_edge_crossings: n must be at least 2");
    return static_cast<std::uint64_t>((n - 2) * (n - 2) / 4);
}

MkDecomposition mk_decompose(long k) {
    if (k < 1) throw std::domain_error("mk_decompose: k must be positive");
    long s = static_cast<long>(std::sqrt(static_cast<double>(k)));
    while (s * s > k) --s;
    while ((s + 1) * (s + 1) <= k) ++s;
    long ceil_sqrt = (s * s == k) ? s : s + 1;
    MkDecomposition d;
    d.k = k;
    d.m = ceil_sqrt + 1;
    d.r = k - (d.m - 2) * (d.m - 2);
    return d;
}

ArcSizes dij_sizes(long n, long i, long j) {
    ArcSizes s{n / 2 - i, (n + 1) / 2 - j, i + j};
    if (i < 0 || j < 0 || s.a < 0 || s.b < 0) throw std::domain_error("dij: arc sizes out of range");
    return s;
}

std::int64_t three_arc_predict(const ArcSizes& s, ArcVertex x, ArcVertex y) {
    auto check = [&](ArcVertex v) {
        if (v.pos < 1 || v.pos > s.size(v.arc)) throw std::domain_error("three_arc_predict: position out of range");
    };
    check(x);
    check(y);
    if (x.arc == y.arc) {
        if (x.pos == y.pos) throw std::domain_error("three_arc_predict: loop edge");
        long between = std::labs(x.pos - y.pos) - 1;
        return between * (s.size(x.arc) - 2 - between);
    }
    if (static_cast<int>(x.arc) > static_cast<int>(y.arc)) std::swap(x, y);
    const std::int64_t a = s.a, b = s.b, c = s.c, m = x.pos, l = y.pos;
    if (x.arc == Arc::Upper && y.arc == Arc::Lower) return (m - 1) * (b - l) + (l - 1) * (a - m) + c * (m + l - 2);
    if (x.arc == Arc::Upper && y.arc == Arc::Third) return (a - m) * (b + c - l) + (l - 1) * (b + m - 1);
    return (b - m) * (a + l - 1) + (c - l) * (a + m - 1);
}

std::int64_t dij_predict(long n, long i, long j, ArcVertex x, ArcVertex y) {
    return three_arc_predict(dij_sizes(n, i, j), x, y);
}

ArcVertex arc_vertex_of(const ArcSizes& s, std::size_t index) {
    long idx = static_cast<long>(index);
    if (idx < s.a) return {Arc::Upper, idx + 1};
    idx -= s.a;
    if (idx < s.b) return {Arc::Lower, idx + 1};
    idx -= s.b;
    if (idx < s.c) return {Arc::Third, idx + 1};
    throw std::domain_error("arc_vertex_of: index out of range");
}

PredictionReport predict_three_arc(const ArcSizes& s, const EdgeCrossCounts& observed) {
    PredictionReport rep;
    const std::size_t n = static_cast<std::size_t>(s.total());
    if (observed.n != n) throw std::domain_error("predict_three_arc: size mismatch");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::int64_t p = three_arc_predict(s, arc_vertex_of(s, u), arc_vertex_of(s, v));
            std::int64_t o = static_cast<std::int64_t>(observed.at(u, v));
            rep.predicted.push_back(p);
            rep.observed.push_back(o);
            if (p != o) rep.mismatches.push_back({EdgeId(u, v), p, o});
        }
    return rep;
}

std::int64_t dab_interarc_bound(long a, long b) {
    if (a < 1 || b < 1) throw std::domain_error("dab_interarc_bound: arcs must be non-empty");
    return static_cast<std::int64_t>(a - 1) * (b - 1);
}

long tau(long k) {
    if (k < 1) throw std::domain_error("tau: k must be positive");
    long cnt = 0;
    for (long d = 1; d * d <= k; ++d)
        if (k % d == 0) cnt += (d * d == k) ? 1 : 2;
    return cnt;
}

MinSkBound minSk_bound(long n, long k) {
    if (n < 1 || k < 1) throw std::domain_error("minSk_bound: n and k must be positive");
    double ratio = static_cast<double>(k) / static_cast<double>(n);
    if (k <= n) return {1.0, "k <= n"};
    // k <= n^{3/2}  <=>  k^2 <= n^3
    long double k2 = static_cast<long double>(k) * k, n3 = static_cast<long double>(n) * n * n;
    if (k2 <= n3) return {ratio * ratio * std::log(ratio), "n<k<=n^{3/2}"};
    return {ratio * ratio * std::log(static_cast<double>(n) * n / k), "n^{3/2}<k"};
}

}  // namespace crossprof
