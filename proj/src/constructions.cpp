#include "crossprof/constructions.hpp"

#include "crossprof/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace crossprof {

namespace {

const std::vector<std::pair<ConstructionKind, std::string>>& kind_names() {
    static const std::vector<std::pair<ConstructionKind, std::string>> names = {
        {ConstructionKind::Convex, "convex"},
        {ConstructionKind::MaxE0, "max-e0"},
        {ConstructionKind::TwoArc, "two-arc"},
        {ConstructionKind::ThreeArc, "three-arc"},
        {ConstructionKind::EkLinear, "ek-linear"},
        {ConstructionKind::E1Linear, "e1-linear"},
        {ConstructionKind::MaxSk, "max-sk"},
        {ConstructionKind::NestedTriangles, "nested-triangles"},
        {ConstructionKind::Grid, "grid"},
    };
    return names;
}

[[noreturn]] void invalid(const std::string& what) {
    throw ConstructionError(ConstructionError::Kind::InvalidParameters, what);
}

long isqrt(long v) {
    long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

std::vector<EdgeId> to_edges(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<EdgeId> out;
    for (auto [a, b] : pairs) out.emplace_back(a, b);
    return out;
}

}  // namespace

std::string kind_name(ConstructionKind k) {
    for (const auto& [kind, name] : kind_names())
        if (kind == k) return name;
    return "unknown";
}

std::optional<ConstructionKind> kind_from_name(const std::string& s) {
    for (const auto& [kind, name] : kind_names())
        if (name == s) return kind;
    return std::nullopt;
}

bool Claim::admits(std::uint64_t count) const {
    switch (kind) {
    case Kind::None: return true;
    case Kind::ExactlyKCrossings: return count == static_cast<std::uint64_t>(k);
    case Kind::ExactlyOneCrossing: return count == 1;
    case Kind::UncrossedEdges: return count == 0;
    case Kind::AtMostKCrossings: return count <= static_cast<std::uint64_t>(k);
    }
    return false;
}

std::string Claim::describe() const {
    switch (kind) {
    case Kind::None: return "none";
    case Kind::ExactlyKCrossings: return "exactly " + std::to_string(k) + " crossings";
    case Kind::ExactlyOneCrossing: return "exactly 1 crossing";
    case Kind::UncrossedEdges: return "0 crossings";
    case Kind::AtMostKCrossings: return "at most " + std::to_string(k) + " crossings";
    }
    return "?";
}

std::string Diagnosis::describe() const {
    std::ostringstream os;
    if (!message.empty()) os << message;
    if (!expected.empty()) {
        if (!message.empty()) os << "; ";
        os << "edge (" << edge.u << "," << edge.v << ") expected " << expected << ", observed " << observed;
    }
    return os.str();
}

std::optional<Diagnosis> check_claim(const GeneratedDrawing& g, const EdgeCrossCounts& counts) {
    for (const auto& e : g.designated) {
        auto c = counts.at(e.u, e.v);
        if (!g.claim.admits(c)) return Diagnosis{e, g.claim.describe(), c, ""};
    }
    return std::nullopt;
}

std::optional<Diagnosis> check_claim(const GeneratedDrawing& g) {
    if (g.claim.kind == Claim::Kind::None) return std::nullopt;
    return check_claim(g, crossing_counts(g.drawing));
}

GeneratedDrawing refine(const ConstructionSpec& spec,
                        const std::function<GeneratedDrawing(const Rational& eps)>& build,
                        const Certifier& certify) {
    if (spec.max_refinements < 1) invalid("max_refinements must be at least 1");
    Rational eps = spec.flatness;
    std::optional<Diagnosis> last;
    for (int it = 1; it <= spec.max_refinements; ++it, eps /= 2) {
        try {
            GeneratedDrawing g = build(eps);
            g.meta.eps = eps;
            g.meta.iterations = it;
            last = certify(g);
            if (!last) return g;
        } catch (const GeneralPositionError& e) {
            last = Diagnosis{{}, "", 0, std::string("general position: ") + e.what()};
        }
    }
    std::string what = "refinement budget exhausted for " + kind_name(spec.kind);
    if (last) what += ": " + last->describe();
    throw ConstructionError(ConstructionError::Kind::BudgetExhausted, what, last);
}

// ---------------------------------------------------------------------------

Drawing gen_convex(long n) {
    if (n < 3) invalid("gen_convex: n must be at least 3");
    std::vector<Point> pts;
    for (long i = 1; i <= n; ++i) pts.emplace_back(i, i * i);
    return Drawing::unchecked(std::move(pts));
}

Drawing gen_grid(long n, std::uint64_t seed) {
    if (n < 4) invalid("gen_grid: n must be at least 4");
    long g = isqrt(n);
    if (g * g < n) ++g;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point> pts;
        for (long idx = 0; idx < n; ++idx) {
            long r = idx / g, c = idx % g;
            // offsets in (-1/4, 1/4) with a denominator that grows with the index
            long den = 4 * 1009 * (idx + 2);
            long ox = static_cast<long>(rng() % 2017) - 1008;
            long oy = static_cast<long>(rng() % 2017) - 1008;
            pts.emplace_back(Rational(c) + make_rational(ox, den), Rational(r) + make_rational(oy, den));
        }
        if (validate_general_position(pts).ok()) return Drawing::unchecked(std::move(pts));
    }
    throw ConstructionError(ConstructionError::Kind::BudgetExhausted, "gen_grid: perturbation attempts exhausted");
}

namespace {

std::vector<Point> three_arc_points(long a, long b, long c, const Rational& eps) {
    std::vector<Point> pts;
    for (long m = 1; m <= a; ++m) {
        Rational x(2 * m - a - 1, 2 * a);
        x.canonicalize();
        pts.emplace_back(x, 1 + eps * x * x);
    }
    for (long m = 1; m <= b; ++m) {
        Rational x(2 * m - b - 1, 2 * b);
        x.canonicalize();
        pts.emplace_back(x, -1 - eps * x * x);
    }
    for (long l = 1; l <= c; ++l) {
        Rational y(c + 1 - 2 * l, 4 * c);
        y.canonicalize();
        pts.emplace_back(3 + eps * y * y, y);
    }
    return pts;
}

struct E1Layout {
    std::vector<Point> pts;
    std::vector<EdgeId> listed;
};

E1Layout e1_layout(long m, const Rational& eps) {
    const Rational h(2, m - 1 > 0 ? m - 1 : 1);
    const Rational gam = eps * h * h / 64, tau = gam / 64;
    const Point A(-4, 4);
    std::vector<Point> P, Q;
    for (long i = 1; i <= m; ++i) {
        Rational x(2 * i - m - 1, m - 1 > 0 ? m - 1 : 1);
        x.canonicalize();
        P.emplace_back(x, -eps * x * x);
    }
    for (long i = 0; i + 1 < m; ++i) {
        Point mid((P[i].x + P[i + 1].x) / 2, (P[i].y + P[i + 1].y) / 2);
        Q.emplace_back(A.x + (1 + tau) * (mid.x - A.x), A.y + (1 + tau) * (mid.y - A.y));
    }
    // reflection in the line y = -eps - gamma, just below the chord P_1P_m
    const Rational yl = -eps - gam;
    auto ref = [&](const Point& p) { return Point(p.x, 2 * yl - p.y); };
    E1Layout L;
    for (auto& p : P) L.pts.push_back(p);
    for (auto& q : Q) L.pts.push_back(q);
    L.pts.push_back(A);
    for (auto& p : P) L.pts.push_back(ref(p));
    for (auto& q : Q) L.pts.push_back(ref(q));
    L.pts.push_back(ref(A));
    auto iP = [&](long i) -> std::size_t { return static_cast<std::size_t>(i <= m ? i - 1 : 2 * m + (i - m - 1)); };
    auto iQ = [&](long i) -> std::size_t { return static_cast<std::size_t>(i <= m - 1 ? m + i - 1 : 3 * m + (i - m - 1)); };
    const std::size_t iA = static_cast<std::size_t>(2 * m - 1), iB = static_cast<std::size_t>(4 * m - 1);
    for (long i = 1; i <= m - 1; ++i) {
        L.listed.emplace_back(iP(i), iQ(i));
        L.listed.emplace_back(iA, iQ(i));
        L.listed.emplace_back(iP(m + i), iQ(m + i));
        L.listed.emplace_back(iB, iQ(m + i));
    }
    for (long i = 2; i <= m; ++i) {
        L.listed.emplace_back(iQ(i - 1), iP(i));
        L.listed.emplace_back(iQ(m + i - 1), iP(m + i));
    }
    return L;
}

struct NestedParams {
    long m = 0;      // vertices per corner
    long q = 3;      // clusters per family
    long lines = 1;  // lines per cluster
};

NestedParams nested_params(long n, long k) {
    NestedParams p;
    p.m = n / 3;
    // C3 = 1
    p.q = std::max(3L, (4 * k + n - 1) / n);
    p.lines = std::max(1L, (n * n + k - 1) / k);
    return p;
}

struct NestedLayout {
    std::vector<Point> pts;
    // families[f] lists vertex ids of one (corner, parity) family from the outside in
    std::vector<std::vector<std::size_t>> families;
    std::vector<std::pair<Rational, Rational>> frame;  // per vertex: (offset across, height along)
};

NestedLayout nested_layout(long n, const NestedParams& p, const Rational& theta) {
    const Point V[3] = {{0, 2}, {-2, -1}, {2, -1}};
    // shrink rate well below the relative line spacing 1/(2qL)
    const Rational ratio(1, 2 * p.q * p.lines);
    const Rational eps = theta * ratio * ratio;
    std::vector<Rational> scale(static_cast<std::size_t>(p.m) + 1);
    scale[1] = 1;
    for (long x = 2; x <= p.m; ++x) scale[static_cast<std::size_t>(x)] = -eps * scale[static_cast<std::size_t>(x - 1)];
    // the whole neighbourhood is a fraction eps of the innermost triangle
    const Rational width = eps * abs(scale[static_cast<std::size_t>(p.m)]);
    const Rational dc = width / p.q;
    const Rational dl = dc * ratio;
    NestedLayout L;
    L.families.resize(6);
    for (long x = 1; x <= p.m; ++x)
        for (int r = 0; r < 3; ++r) {
            const long parity = (x - 1) % 2;
            const long d = (x + 1) / 2;  // position inside the family, outermost first
            const long layer = d / p.q, cluster = d % p.q;
            Rational off = Rational(cluster) * dc + layer * dl;
            // across direction: V rotated a quarter turn, scaled to unit L1 length
            Rational wx = -V[r].y, wy = V[r].x;
            Rational wn = abs(wx) + abs(wy);
            const Rational& s = scale[static_cast<std::size_t>(x)];
            L.families[static_cast<std::size_t>(2 * r + parity)].push_back(L.pts.size());
            L.frame.emplace_back(off, abs(s));
            L.pts.emplace_back(s * V[r].x + off * wx / wn, s * V[r].y + off * wy / wn);
        }
    // leftovers on a small parabola at the centre
    for (long q = 1; q <= n - 3 * p.m; ++q) L.pts.emplace_back(width * (q + 1) / 3, width * q * q / 7);
    return L;
}

// Inside every family: each edge between a vertex below and between P_i, P_j
// and a vertex above P_i must cross P_iP_j.
std::optional<Diagnosis> nested_key_observation(const NestedLayout& L) {
    for (const auto& fam : L.families) {
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b) {
                const std::size_t i = fam[a], j = fam[b];  // i is above j
                Rational lo = std::min(L.frame[i].first, L.frame[j].first);
                Rational hi = std::max(L.frame[i].first, L.frame[j].first);
                for (std::size_t c = b + 1; c < fam.size(); ++c) {
                    const std::size_t u = fam[c];
                    if (!(L.frame[u].first > lo && L.frame[u].first < hi)) continue;
                    for (std::size_t w = 0; w < a; ++w)
                        if (!segments_cross_properly(L.pts[i], L.pts[j], L.pts[u], L.pts[fam[w]]))
                            return Diagnosis{EdgeId(i, j), "crossed by (" + std::to_string(u) + "," +
                                                               std::to_string(fam[w]) + ")",
                                             0, "key observation fails"};
                }
            }
    }
    return std::nullopt;
}

struct Recipe {
    std::function<GeneratedDrawing(const Rational& eps)> build;
    Certifier certify;
};

std::optional<Diagnosis> no_check(const GeneratedDrawing&) { return std::nullopt; }

long need_k(const ConstructionSpec& spec) {
    if (!spec.k) invalid(kind_name(spec.kind) + " requires k");
    return *spec.k;
}

Recipe arcs_recipe(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) invalid("arc sizes must be non-negative");
    ArcSizes sizes{a, b, c};
    return {[=](const Rational& eps) {
                ConstructionMeta meta;
                meta.notes.push_back("arcs " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
                return GeneratedDrawing{Drawing(three_arc_points(a, b, c, eps)), {}, {}, meta};
            },
            [=](const GeneratedDrawing& g) -> std::optional<Diagnosis> {
                auto rep = predict_three_arc(sizes, crossing_counts(g.drawing));
                if (rep.verified()) return std::nullopt;
                const auto& mm = rep.mismatches.front();
                return Diagnosis{mm.edge, std::to_string(mm.predicted), static_cast<std::uint64_t>(mm.observed),
                                 "prediction mismatch"};
            }};
}

Recipe ek_recipe(long n, long k) {
    if (n < 4) invalid("ek-linear: n must be at least 4");
    if (k < 1 || static_cast<std::uint64_t>(k) > max_edge_crossings(n))
        invalid("ek-linear: k must lie in [1, floor(((n-2)/2)^2)]");
    const int acase = ek_case_for(n, k);
    const Claim claim{Claim::Kind::ExactlyKCrossings, k};
    Certifier certify = [](const GeneratedDrawing& g) { return check_claim(g); };

    if (acase <= 5) {
        auto d = mk_decompose(k);
        auto block = std::make_shared<BlockConfig>(block_for(d.m, d.r));
        const long t = n >= 2 * d.m ? n / (2 * d.m) : n / static_cast<long>(block->points.size());
        return {[=](const Rational& eps) {
                    auto tiled = tile_blocks(block->points, block->designated, t, n, eps);
                    ConstructionMeta meta;
                    meta.m = d.m;
                    meta.r = d.r;
                    meta.j = block->j;
                    meta.tiles = t;
                    meta.appendix_case = acase;
                    meta.block_case = block->appendix_case;
                    meta.per_block = static_cast<long>(block->designated.size());
                    meta.block_size = block->points.size();
                    if (block->appendix_case == 3 && block->j <= 2)
                        meta.notes.push_back("case 3 with j <= 2 has no interior diameters");
                    return GeneratedDrawing{Drawing(std::move(tiled.points)), to_edges(tiled.designated), claim, meta};
                },
                certify};
    }

    const long M = (n - 1) / 2;
    BlockConfig b;
    if (acase == 6) b = block_case6(M, k - ((M - 1) * (M - 1) + 1));
    else if (acase == 8) b = block_case8(M);
    else b = block_case7(M, k - ((M - 1) * (M - 1) + 2));
    auto block = std::make_shared<BlockConfig>(std::move(b));
    return {[=](const Rational&) {
                ConstructionMeta meta;
                meta.m = block->m;
                meta.r = block->r;
                meta.j = block->j;
                meta.tiles = 1;
                meta.appendix_case = acase;
                meta.block_case = acase;
                meta.per_block = static_cast<long>(block->designated.size());
                meta.block_size = block->points.size();
                return GeneratedDrawing{Drawing(block->points), to_edges(block->designated), claim, meta};
            },
            certify};
}

Recipe e1_recipe(long n) {
    if (n < 8) invalid("e1-linear: n must be at least 8");
    const long m = (n + 3) / 4;
    const long removed = 4 * m - n;
    const long need = removed == 0 ? 6 * m - 6 : (3 * n + 1) / 2 - 7;
    return {[=](const Rational& eps) {
                E1Layout L = e1_layout(m, eps);
                // delete P_1, P_{m+1}, Q_1 in succession
                std::vector<std::size_t> drop = {0, static_cast<std::size_t>(2 * m), static_cast<std::size_t>(m)};
                drop.resize(static_cast<std::size_t>(removed));
                std::vector<long> remap(L.pts.size(), -1);
                std::vector<Point> pts;
                for (std::size_t i = 0; i < L.pts.size(); ++i)
                    if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
                        remap[i] = static_cast<long>(pts.size());
                        pts.push_back(L.pts[i]);
                    }
                Drawing d(std::move(pts));
                std::vector<EdgeId> listed;
                for (const auto& e : L.listed)
                    if (remap[e.u] >= 0 && remap[e.v] >= 0)
                        listed.emplace_back(static_cast<std::size_t>(remap[e.u]), static_cast<std::size_t>(remap[e.v]));
                ConstructionMeta meta;
                meta.m = m;
                meta.notes.push_back("listed edges " + std::to_string(listed.size()));
                std::vector<EdgeId> des;
                if (removed == 0) des = listed;
                else {
                    // after deletions keep the listed edges that still have one crossing
                    auto counts = crossing_counts(d);
                    for (const auto& e : listed)
                        if (counts.at(e.u, e.v) == 1) des.push_back(e);
                }
                return GeneratedDrawing{std::move(d), std::move(des), {Claim::Kind::ExactlyOneCrossing, 1}, meta};
            },
            [=](const GeneratedDrawing& g) -> std::optional<Diagnosis> {
                if (auto d = check_claim(g)) return d;
                if (static_cast<long>(g.designated.size()) < need)
                    return Diagnosis{{}, "", 0,
                                     "only " + std::to_string(g.designated.size()) +
                                         " edges with one crossing, need " + std::to_string(need)};
                return std::nullopt;
            }};
}

Recipe maxsk_recipe(long n, long k) {
    if (n < 4 || k < 1 || 4 * k > (n - 2) * (n - 2)) invalid("max-sk: need 1 <= k <= ((n-2)/2)^2");
    const long s = isqrt(k);
    const long m = 2 * s + 2;
    const long l = n / m;
    auto block = std::make_shared<std::vector<Point>>(arc_block(m));
    auto pairs = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
    for (std::size_t a = 0; a < static_cast<std::size_t>(m); ++a)
        for (std::size_t b = a + 1; b < static_cast<std::size_t>(m); ++b) pairs->emplace_back(a, b);
    return {[=](const Rational& eps) {
                auto tiled = tile_blocks(*block, *pairs, l, n, eps);
                ConstructionMeta meta;
                meta.m = m;
                meta.tiles = l;
                meta.per_block = static_cast<long>(pairs->size());
                meta.block_size = static_cast<std::size_t>(m);
                return GeneratedDrawing{Drawing(std::move(tiled.points)), to_edges(tiled.designated),
                                        {Claim::Kind::AtMostKCrossings, s * s}, meta};
            },
            [](const GeneratedDrawing& g) { return check_claim(g); }};
}

Recipe nested_recipe(long n, long k) {
    if (n < 9) invalid("nested-triangles: n must be at least 9");
    if (k <= n || k >= n * n) invalid("nested-triangles: need n < k < n^2");
    const NestedParams p = nested_params(n, k);
    auto layout = std::make_shared<NestedLayout>();
    return {[=](const Rational& eta) {
                *layout = nested_layout(n, p, eta);
                ConstructionMeta meta;
                meta.m = p.m;
                meta.notes.push_back("clusters " + std::to_string(p.q) + ", lines per cluster " +
                                     std::to_string(p.lines));
                return GeneratedDrawing{Drawing(layout->pts), {}, {}, meta};
            },
            [=](const GeneratedDrawing&) { return nested_key_observation(*layout); }};
}

Recipe recipe_for(const ConstructionSpec& spec) {
    switch (spec.kind) {
    case ConstructionKind::Convex: {
        long n = spec.n;
        return {[=](const Rational&) { return GeneratedDrawing{gen_convex(n), {}, {}, {}}; }, no_check};
    }
    case ConstructionKind::Grid: {
        long n = spec.n;
        auto seed = spec.seed;
        return {[=](const Rational&) { return GeneratedDrawing{gen_grid(n, seed), {}, {}, {}}; }, no_check};
    }
    case ConstructionKind::MaxE0: {
        long n = spec.n;
        if (n < 4) invalid("max-e0: n must be at least 4");
        return {[=](const Rational&) {
                    // P_i on the parabola and A below every line P_iP_j (those
                    // lines meet x = 0 at -ij > -n^2)
                    std::vector<Point> pts;
                    for (long i = 1; i <= n - 1; ++i) pts.emplace_back(i, i * i);
                    pts.emplace_back(0, -n * n);
                    const std::size_t A = static_cast<std::size_t>(n - 1);
                    std::vector<EdgeId> des;
                    for (std::size_t i = 0; i < A; ++i) des.emplace_back(i, A);
                    for (std::size_t i = 0; i + 1 < A; ++i) des.emplace_back(i, i + 1);
                    des.emplace_back(0, A - 1);
                    return GeneratedDrawing{Drawing(std::move(pts)), std::move(des),
                                            {Claim::Kind::UncrossedEdges, 0}, {}};
                },
                [](const GeneratedDrawing& g) { return check_claim(g); }};
    }
    case ConstructionKind::TwoArc:
        if (spec.arcs.size() != 2) invalid("two-arc requires arcs a,b");
        if (spec.arcs[0] + spec.arcs[1] != spec.n) invalid("arc sizes must add up to n");
        if (spec.n < 2) invalid("two-arc: n must be at least 2");
        return arcs_recipe(spec.arcs[0], spec.arcs[1], 0);
    case ConstructionKind::ThreeArc:
        if (spec.arcs.size() != 3) invalid("three-arc requires arcs a,b,c");
        if (spec.arcs[0] + spec.arcs[1] + spec.arcs[2] != spec.n) invalid("arc sizes must add up to n");
        if (spec.n < 3) invalid("three-arc: n must be at least 3");
        return arcs_recipe(spec.arcs[0], spec.arcs[1], spec.arcs[2]);
    case ConstructionKind::EkLinear: return ek_recipe(spec.n, need_k(spec));
    case ConstructionKind::E1Linear: return e1_recipe(spec.n);
    case ConstructionKind::MaxSk: return maxsk_recipe(spec.n, need_k(spec));
    case ConstructionKind::NestedTriangles: return nested_recipe(spec.n, need_k(spec));
    }
    invalid("unknown construction kind");
}

ConstructionSpec base_spec(ConstructionKind kind, long n, std::optional<long> k, int max_refinements) {
    ConstructionSpec s;
    s.kind = kind;
    s.n = n;
    s.k = k;
    s.max_refinements = max_refinements;
    return s;
}

}  // namespace

GeneratedDrawing refine(const ConstructionSpec& spec, const Certifier& certify) {
    return refine(spec, recipe_for(spec).build, certify);
}

GeneratedDrawing generate(const ConstructionSpec& spec) {
    Recipe r = recipe_for(spec);
    return refine(spec, r.build, r.certify);
}

GeneratedDrawing gen_max_e0(long n) { return generate(base_spec(ConstructionKind::MaxE0, n, std::nullopt, 1)); }

GeneratedDrawing gen_two_arc(long a, long b, const Rational& flatness) {
    ConstructionSpec s = base_spec(ConstructionKind::TwoArc, a + b, std::nullopt, 24);
    s.arcs = {a, b};
    s.flatness = flatness;
    return generate(s);
}

GeneratedDrawing gen_three_arc(long a, long b, long c, const Rational& flatness) {
    ConstructionSpec s = base_spec(ConstructionKind::ThreeArc, a + b + c, std::nullopt, 24);
    s.arcs = {a, b, c};
    s.flatness = flatness;
    return generate(s);
}

GeneratedDrawing gen_ek_linear(long n, long k, int max_refinements) {
    return generate(base_spec(ConstructionKind::EkLinear, n, k, max_refinements));
}

GeneratedDrawing gen_e1_linear(long n, int max_refinements) {
    return generate(base_spec(ConstructionKind::E1Linear, n, std::nullopt, max_refinements));
}

GeneratedDrawing gen_maxSk(long n, long k, int max_refinements) {
    return generate(base_spec(ConstructionKind::MaxSk, n, k, max_refinements));
}

GeneratedDrawing gen_nested_triangles(long n, long k, int max_refinements) {
    return generate(base_spec(ConstructionKind::NestedTriangles, n, k, max_refinements));
}

// ---------------------------------------------------------------------------

int ek_case_for(long n, long k) {
    if (n % 2 == 0 || 4 * k <= (n - 3) * (n - 3)) {
        auto d = mk_decompose(k);
        int base = d.m % 2 == 0 ? 1 : d.r == 1 ? 3 : d.r == 2 * d.m - 3 ? 4 : 2;
        return n % 2 == 0 ? base : 5;
    }
    // a single (2m-1)-point Case 3 block still fits here (n = 13, k = 26)
    auto d = mk_decompose(k);
    if (d.m % 2 == 1 && d.r == 1 && 2 * d.m - 1 <= n) return 3;
    const long M = (n - 1) / 2;
    if ((M - 1) % 2 == 1) return 6;
    return k == (M - 1) * (M - 1) + 1 ? 8 : 7;
}

long ek_expected_designated(const ConstructionMeta& meta) {
    switch (meta.block_case) {
    case 1:
    case 2: return meta.tiles * meta.j;
    case 3: return meta.tiles * std::max(0L, meta.j - 2);
    case 4: return meta.tiles * meta.m;
    case 6:
    case 7: return meta.j - 1;
    case 8: return meta.j;
    default: return -1;
    }
}

}  // namespace crossprof
