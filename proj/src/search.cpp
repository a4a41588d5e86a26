#include "crossprof/search.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace crossprof {

std::string ArcFamily::label() const {
    std::ostringstream os;
    if (tier == "dij") os << "D(" << i << "," << j << ")=";
    os << "D_{" << a << "," << b;
    if (c > 0) os << "," << c;
    os << "}";
    return os.str();
}

std::string ScreenEntry::describe() const {
    std::ostringstream os;
    os << family.label() << ": ";
    switch (verdict) {
    case Verdict::RejectedAnalytic: os << "rejected analytically"; break;
    case Verdict::RejectedOracle: os << "rejected by oracle"; break;
    case Verdict::Certified: os << "certified"; break;
    }
    if (offending) os << " at edge (" << offending->u << "," << offending->v << ")";
    if (audited) os << " [audit confirmed]";
    return os.str();
}

std::vector<ArcFamily> zero_search_families(long n, long k) {
    std::vector<ArcFamily> out;
    out.push_back({0, n, 0, "convex"});
    if (k <= n) {
        out.push_back({1, n - 1, 0, "near-convex"});
        return out;
    }
    const long top = static_cast<long>(std::ceil(std::pow(static_cast<double>(n), 0.2)));
    for (long j = 1; j <= top && j < n; ++j) out.push_back({j, n - j, 0, "two-arc"});
    const long lo = std::max(1L, (n + 99) / 100);
    const long hi = std::max(lo + 1, (n + 49) / 50);
    for (long i = lo; i < hi; ++i)
        for (long j = lo; j < hi; ++j) {
            if (n / 2 - i < 1 || (n + 1) / 2 - j < 1) continue;
            ArcSizes s = dij_sizes(n, i, j);
            out.push_back({s.a, s.b, s.c, "dij", i, j});
        }
    return out;
}

namespace {

struct FamilyEntry {
    Drawing drawing;
    EdgeCrossCounts counts;
};

std::mutex cache_mutex;
std::map<std::tuple<long, long, long>, std::shared_ptr<const FamilyEntry>> cache;

std::shared_ptr<const FamilyEntry> realize(const ArcFamily& f) {
    auto key = std::make_tuple(f.a, f.b, f.c);
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ConstructionSpec spec;
    spec.kind = ConstructionKind::ThreeArc;
    spec.n = f.a + f.b + f.c;
    spec.arcs = {f.a, f.b, f.c};
    spec.flatness = make_rational(1, 10);
    auto entry = std::make_shared<FamilyEntry>();
    GeneratedDrawing g = refine(spec, [&](const GeneratedDrawing& g) -> std::optional<Diagnosis> {
        entry->counts = crossing_counts(g.drawing);
        auto rep = predict_three_arc(f.sizes(), entry->counts);
        if (rep.verified()) return std::nullopt;
        const auto& mm = rep.mismatches.front();
        return Diagnosis{mm.edge, std::to_string(mm.predicted), static_cast<std::uint64_t>(mm.observed),
                         "prediction mismatch"};
    });
    entry->drawing = std::move(g.drawing);
    std::lock_guard lock(cache_mutex);
    return cache.emplace(key, std::move(entry)).first->second;
}

std::optional<EdgeId> predicted_k_edge(const ArcFamily& f, long k) {
    const ArcSizes s = f.sizes();
    const std::size_t n = static_cast<std::size_t>(s.total());
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (three_arc_predict(s, arc_vertex_of(s, u), arc_vertex_of(s, v)) == k) return EdgeId(u, v);
    return std::nullopt;
}

std::optional<EdgeId> observed_k_edge(const EdgeCrossCounts& c, long k) {
    for (std::size_t i = 0; i < c.counts.size(); ++i)
        if (c.counts[i] == static_cast<std::uint64_t>(k)) return edge_at(i, c.n);
    return std::nullopt;
}

}  // namespace

const EdgeCrossCounts& family_counts(const ArcFamily& f) { return realize(f)->counts; }
Drawing family_drawing(const ArcFamily& f) { return realize(f)->drawing; }

ZeroSearchResult find_zero_ek(long n, long k, const ZeroSearchOptions& opts) {
    if (n < 3) throw std::invalid_argument("find_zero_ek: n must be at least 3");
    if (k < 1) throw std::invalid_argument("find_zero_ek: k must be at least 1");
    std::vector<ScreenEntry> trace;
    for (const ArcFamily& f : zero_search_families(n, k)) {
        ScreenEntry entry;
        entry.family = f;
        if (opts.screen) {
            if (auto e = predicted_k_edge(f, k)) {
                entry.verdict = ScreenEntry::Verdict::RejectedAnalytic;
                entry.offending = e;
                if (opts.audit) entry.audited = family_counts(f).at(e->u, e->v) == static_cast<std::uint64_t>(k);
                trace.push_back(entry);
                continue;
            }
        }
        auto realized = realize(f);
        if (auto e = observed_k_edge(realized->counts, k)) {
            entry.verdict = ScreenEntry::Verdict::RejectedOracle;
            entry.offending = e;
            trace.push_back(entry);
            continue;
        }
        entry.verdict = ScreenEntry::Verdict::Certified;
        trace.push_back(entry);
        return {realized->drawing, f, std::move(trace)};
    }
    std::ostringstream os;
    os << "no family certifies e_" << k << " = 0 for n = " << n << ":";
    for (const auto& t : trace) os << "\n  " << t.describe();
    throw SearchExhausted(os.str(), std::move(trace));
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<Metric, std::string>>& metric_names() {
    static const std::vector<std::pair<Metric, std::string>> names = {
        {Metric::Ek, "e_k"},
        {Metric::Sk, "S_k"},
        {Metric::SkPrimed, "S'_k"},
        {Metric::KEdges, "k-edges"},
        {Metric::LeqKEdges, "<=k-edges"},
        {Metric::VertexPrimedLeqK, "vertex-max-primed-leq-k"},
    };
    return names;
}

std::uint64_t profile_sum(const EdgeCrossCounts& c, long k) { return profile_from_counts(c).s_k(static_cast<std::size_t>(k)); }

std::uint64_t vertex_primed_max(const EdgeCrossCounts& c, long k) {
    std::vector<std::uint64_t> deg(c.n, 0);
    for (std::size_t i = 0; i < c.counts.size(); ++i)
        if (c.counts[i] <= static_cast<std::uint64_t>(k)) {
            EdgeId e = edge_at(i, c.n);
            ++deg[e.u];
            ++deg[e.v];
        }
    std::uint64_t best = 0;
    for (auto d : deg) best = std::max(best, d);
    return best;
}

// Everything the metrics need for one drawing, computed lazily.
struct Measured {
    explicit Measured(const Drawing& d) : drawing(d) {}
    const Drawing& drawing;
    std::unique_ptr<OrientationTable> table;
    std::optional<EdgeCrossCounts> plain, primed;
    std::optional<std::vector<std::uint32_t>> left;

    const OrientationTable& orient() {
        if (!table) table = std::make_unique<OrientationTable>(drawing);
        return *table;
    }
    std::uint64_t get(Metric m, long k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        switch (m) {
        case Metric::Ek:
        case Metric::Sk: {
            if (!plain) plain = crossing_counts(orient());
            auto p = profile_from_counts(*plain);
            return m == Metric::Ek ? p.e_k(kk) : p.s_k(kk);
        }
        case Metric::SkPrimed:
            if (!primed) primed = primed_counts(orient());
            return profile_sum(*primed, k);
        case Metric::VertexPrimedLeqK:
            if (!primed) primed = primed_counts(orient());
            return vertex_primed_max(*primed, k);
        case Metric::KEdges:
        case Metric::LeqKEdges:
            if (!left) left = left_counts(orient());
            return m == Metric::KEdges ? k_edge_count(*left, drawing.size(), kk)
                                       : leq_k_edge_count(*left, drawing.size(), kk);
        }
        return 0;
    }
};

bool uses_k(ConstructionKind kind) {
    return kind == ConstructionKind::EkLinear || kind == ConstructionKind::MaxSk ||
           kind == ConstructionKind::NestedTriangles;
}

ConstructionSpec sweep_spec(ConstructionKind kind, long n, long k) {
    ConstructionSpec s;
    s.kind = kind;
    s.n = n;
    if (uses_k(kind)) s.k = k;
    if (kind == ConstructionKind::TwoArc) s.arcs = {n / 2, (n + 1) / 2};
    if (kind == ConstructionKind::ThreeArc) {
        ArcSizes d = dij_sizes(n, 1, 1);
        s.arcs = {d.a, d.b, d.c};
        s.flatness = make_rational(1, 10);
    }
    return s;
}

}  // namespace

std::string metric_name(Metric m) {
    for (const auto& [metric, name] : metric_names())
        if (metric == m) return name;
    return "unknown";
}

std::optional<Metric> metric_from_name(const std::string& s) {
    for (const auto& [metric, name] : metric_names())
        if (name == s) return metric;
    return std::nullopt;
}

std::uint64_t measure(const Drawing& d, Metric metric, long k) {
    Measured m(d);
    return m.get(metric, k);
}

SweepReport extremal_sweep(const SweepConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto over_budget = [&] {
        if (config.budget_seconds <= 0) return false;
        return std::chrono::duration<double>(clock::now() - start).count() > config.budget_seconds;
    };

    std::vector<std::pair<long, long>> pairs;
    for (long n : config.ns)
        for (long k : config.ks) pairs.emplace_back(n, k);
    pairs.insert(pairs.end(), config.cells.begin(), config.cells.end());

    SweepReport report;
    for (ConstructionKind kind : config.families) {
        // k-independent families are built once per n
        std::map<long, std::shared_ptr<Drawing>> by_n;
        for (auto [n, k] : pairs) {
            std::vector<SweepCell> row;
            for (Metric metric : config.metrics) {
                SweepCell cell;
                cell.family = kind;
                cell.n = n;
                cell.k = k;
                cell.metric = metric;
                if (n >= 1 && k >= 1) cell.bound = minSk_bound(n, k).value;
                row.push_back(cell);
            }
            if (over_budget()) {
                report.complete = false;
                for (auto& c : row) c.note = "budget exceeded";
                report.cells.insert(report.cells.end(), row.begin(), row.end());
                continue;
            }
            std::shared_ptr<Drawing> d;
            try {
                if (!uses_k(kind) && by_n.count(n)) d = by_n[n];
                else {
                    d = std::make_shared<Drawing>(generate(sweep_spec(kind, n, k)).drawing);
                    if (!uses_k(kind)) by_n[n] = d;
                }
            } catch (const std::exception& e) {
                for (auto& c : row) c.note = e.what();
                report.cells.insert(report.cells.end(), row.begin(), row.end());
                continue;
            }
            Measured m(*d);
            for (auto& c : row) {
                c.value = m.get(c.metric, k);
                c.measured = true;
            }
            report.cells.insert(report.cells.end(), row.begin(), row.end());
        }
    }

    // log C = mean of log(value / bound) over usable cells
    for (ConstructionKind kind : config.families)
        for (Metric metric : config.metrics) {
            FittedConstant fit;
            fit.family = kind;
            fit.metric = metric;
            double acc = 0;
            for (const auto& c : report.cells) {
                if (c.family != kind || c.metric != metric || !c.measured) continue;
                if (c.value == 0 || c.bound <= 0) continue;
                double ratio = static_cast<double>(c.value) / c.bound;
                acc += std::log(ratio);
                fit.min_ratio = fit.cells == 0 ? ratio : std::min(fit.min_ratio, ratio);
                fit.max_ratio = fit.cells == 0 ? ratio : std::max(fit.max_ratio, ratio);
                ++fit.cells;
            }
            if (fit.cells == 0) continue;
            fit.constant = std::exp(acc / static_cast<double>(fit.cells));
            report.fits.push_back(fit);
        }
    return report;
}

}  // namespace crossprof
