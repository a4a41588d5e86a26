#include "crossprof/profile.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace crossprof {

namespace {

std::atomic<unsigned> g_threads{0};
std::atomic<std::uint64_t> g_profiles{0};
std::atomic<std::uint64_t> g_violations{0};

unsigned worker_count(std::size_t chunks) {
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(oracle_threads(), chunks)));
}

// body(chunk, worker) for every chunk in [0, chunks); chunks are pulled by the
// workers in any order.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t, unsigned)>& body) {
    unsigned workers = worker_count(chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(c, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t c; (c = next.fetch_add(1)) < chunks;) body(c, w);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

void set_oracle_threads(unsigned threads) { g_threads = threads; }

unsigned oracle_threads() {
    unsigned t = g_threads.load();
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

OrientationTable::OrientationTable(const Drawing& d) : n_(d.size()), sign_(n_ * n_ * n_, 0) {
    // Clear denominators per axis; a positive diagonal scaling keeps every sign.
    mpz_class lx = 1, ly = 1;
    for (const auto& p : d.points()) {
        mpz_lcm(lx.get_mpz_t(), lx.get_mpz_t(), p.x.get_den_mpz_t());
        mpz_lcm(ly.get_mpz_t(), ly.get_mpz_t(), p.y.get_den_mpz_t());
    }
    std::vector<mpz_class> X(n_), Y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        X[i] = d[i].x.get_num() * (lx / d[i].x.get_den());
        Y[i] = d[i].y.get_num() * (ly / d[i].y.get_den());
    }
    const std::size_t n = n_;
    parallel_chunks(n, [&](std::size_t i, unsigned) {
        mpz_class dx, dy, t1, t2;
        for (std::size_t j = i + 1; j < n; ++j) {
            dx = X[j] - X[i];
            dy = Y[j] - Y[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                t1 = Y[k] - Y[i];
                t1 *= dx;
                t2 = X[k] - X[i];
                t2 *= dy;
                int s = cmp(t1, t2);
                std::int8_t v = static_cast<std::int8_t>((s > 0) - (s < 0));
                auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::int8_t x) {
                    sign_[(a * n + b) * n + c] = x;
                };
                put(i, j, k, v);
                put(j, k, i, v);
                put(k, i, j, v);
                put(j, i, k, static_cast<std::int8_t>(-v));
                put(i, k, j, static_cast<std::int8_t>(-v));
                put(k, j, i, static_cast<std::int8_t>(-v));
            }
        }
    });
}

std::uint64_t EdgeCrossCounts::sum() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

std::uint64_t CrossingProfile::s_k(std::size_t k) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i <= k && i < e.size(); ++i) s += e[i];
    return s;
}

EdgeCrossCounts crossing_counts(const OrientationTable& o) {
    const std::size_t n = o.size();
    const std::size_t m = edge_total(n);
    std::vector<EdgeId> edges;
    edges.reserve(m);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);

    const std::size_t chunk = 64;
    const std::size_t chunks = (m + chunk - 1) / chunk;
    // Integer tallies per worker; addition order cannot change the totals.
    std::vector<std::vector<std::uint64_t>> partial(worker_count(chunks), std::vector<std::uint64_t>(m, 0));
    parallel_chunks(chunks, [&](std::size_t c, unsigned w) {
        auto& acc = partial[w];
        std::size_t lo = c * chunk, hi = std::min(m, lo + chunk);
        for (std::size_t x = lo; x < hi; ++x) {
            const std::size_t a = edges[x].u, b = edges[x].v;
            for (std::size_t y = x + 1; y < m; ++y) {
                const std::size_t cc = edges[y].u, d = edges[y].v;
                if (cc == a || cc == b || d == a || d == b) continue;
                if (o(a, b, cc) * o(a, b, d) < 0 && o(cc, d, a) * o(cc, d, b) < 0) {
                    ++acc[x];
                    ++acc[y];
                }
            }
        }
    });
    EdgeCrossCounts out{n, false, std::vector<std::uint64_t>(m, 0)};
    for (const auto& acc : partial)
        for (std::size_t i = 0; i < acc.size(); ++i) out.counts[i] += acc[i];
    return out;
}

EdgeCrossCounts crossing_counts(const Drawing& d) { return crossing_counts(OrientationTable(d)); }

EdgeCrossCounts primed_counts(const OrientationTable& o) {
    const std::size_t n = o.size();
    const std::size_t m = edge_total(n);
    EdgeCrossCounts out{n, true, std::vector<std::uint64_t>(m, 0)};
    parallel_chunks(n, [&](std::size_t a, unsigned) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::uint64_t cnt = 0;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (o(c, d, a) * o(c, d, b) < 0) ++cnt;
            out.counts[edge_index(a, b, n)] = cnt;
        }
    });
    return out;
}

EdgeCrossCounts primed_counts(const Drawing& d) { return primed_counts(OrientationTable(d)); }

bool sanity_ceiling_holds(const CrossingProfile& p) {
    // S_k^2 <= n^2 * 16.875 * k  <=>  8 S_k^2 <= 135 n^2 k
    mpz_class n2 = mpz_class(static_cast<unsigned long>(p.n)) * static_cast<unsigned long>(p.n);
    std::uint64_t s = 0;
    std::size_t top = std::max<std::size_t>(p.e.size(), 1);
    for (std::size_t k = 0; k < top; ++k) {
        s += p.e_k(k);
        if (k == 0) continue;
        mpz_class lhs = mpz_class(static_cast<unsigned long>(s));
        lhs = lhs * lhs * 8;
        mpz_class rhs = n2 * 135 * static_cast<unsigned long>(k);
        if (lhs > rhs) return false;
    }
    return true;
}

CeilingAudit ceiling_audit() { return {g_profiles.load(), g_violations.load()}; }

CrossingProfile profile_from_counts(const EdgeCrossCounts& c) {
    CrossingProfile p;
    p.n = c.n;
    p.primed = c.primed;
    for (auto v : c.counts) {
        if (v >= p.e.size()) p.e.resize(v + 1, 0);
        ++p.e[v];
    }
    while (!p.e.empty() && p.e.back() == 0) p.e.pop_back();
    ++g_profiles;
    if (!sanity_ceiling_holds(p)) ++g_violations;
    return p;
}

CrossingProfile crossing_profile(const Drawing& d) { return profile_from_counts(crossing_counts(d)); }
CrossingProfile primed_profile(const Drawing& d) { return profile_from_counts(primed_counts(d)); }

std::uint64_t e_k(const Drawing& d, std::size_t k) { return crossing_profile(d).e_k(k); }
std::uint64_t s_k(const Drawing& d, std::size_t k) { return crossing_profile(d).s_k(k); }
std::uint64_t e_k_primed(const Drawing& d, std::size_t k) { return primed_profile(d).e_k(k); }
std::uint64_t s_k_primed(const Drawing& d, std::size_t k) { return primed_profile(d).s_k(k); }
std::uint64_t total_crossings(const Drawing& d) { return crossing_counts(d).sum() / 2; }

std::vector<std::uint32_t> left_counts(const OrientationTable& o) {
    const std::size_t n = o.size();
    std::vector<std::uint32_t> left(edge_total(n), 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::uint32_t l = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (o(a, b, c) > 0) ++l;
            left[edge_index(a, b, n)] = l;
        }
    return left;
}

std::uint64_t k_edge_count(const std::vector<std::uint32_t>& left, std::size_t n, std::size_t k) {
    std::uint64_t cnt = 0;
    for (auto l : left) {
        std::size_t r = n - 2 - l;
        if (l == k || r == k) ++cnt;
    }
    return cnt;
}

std::uint64_t leq_k_edge_count(const std::vector<std::uint32_t>& left, std::size_t n, std::size_t k) {
    std::uint64_t cnt = 0;
    for (auto l : left) {
        std::size_t r = n - 2 - l;
        if (std::min<std::size_t>(l, r) <= k) ++cnt;
    }
    return cnt;
}

std::uint64_t k_edge_count(const Drawing& d, std::size_t k) {
    return k_edge_count(left_counts(OrientationTable(d)), d.size(), k);
}

std::uint64_t leq_k_edge_count(const Drawing& d, std::size_t k) {
    return leq_k_edge_count(left_counts(OrientationTable(d)), d.size(), k);
}

}  // namespace crossprof
