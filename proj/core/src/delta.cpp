#include "gromet/delta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gromet {

namespace {

struct Best {
    double delta = -1.0;
    std::array<int, 4> witness{-1, -1, -1, -1};

    void offer(double d, int i, int j, int k, int l) {
        if (d > delta) {
            delta = d;
            witness = {i, j, k, l};
        } else if (d == delta) {
            const std::array<int, 4> w{i, j, k, l};
            if (w < witness) {
                witness = w;
            }
        }
    }
    void merge(const Best& o) {
        if (o.delta > delta || (o.delta == delta && o.witness < witness)) {
            delta = o.delta;
            witness = o.witness;
        }
    }
};

inline double quad_delta(const FiniteMetric& m, int i, int j, int k, int l) {
    const double s1 = m(i, j) + m(k, l);
    const double s2 = m(i, k) + m(j, l);
    const double s3 = m(i, l) + m(j, k);
    double hi = s1, mid = s2;
    if (mid > hi) {
        std::swap(hi, mid);
    }
    if (s3 > hi) {
        mid = hi;
        hi = s3;
    } else if (s3 > mid) {
        mid = s3;
    }
    return 0.5 * (hi - mid);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

int resolve_threads(int threads) {
    if (threads > 0) {
        return threads;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

double evaluate_quadruple(const FiniteMetric& m, const std::array<int, 4>& q) {
    return quad_delta(m, q[0], q[1], q[2], q[3]);
}

DeltaReport delta_four_point(const FiniteMetric& m, DeltaMode mode,
                             std::uint64_t budget, std::uint64_t seed, int threads) {
    const int n = m.size();
    DeltaReport rep;
    rep.mode = mode;
    if (n < 4) {
        rep.delta = 0.0;
        return rep;
    }
    const int workers = resolve_threads(threads);

    if (mode == DeltaMode::exact) {
        std::vector<Best> partial(workers);
        std::vector<std::thread> pool;
        std::atomic<int> next_i{0};
        auto body = [&](int w) {
            Best local;
            for (;;) {
                const int i = next_i.fetch_add(1);
                if (i > n - 4) {
                    break;
                }
                for (int j = i + 1; j < n - 2; ++j) {
                    const double dij = m(i, j);
                    const double* ri = m.row(i);
                    const double* rj = m.row(j);
                    for (int k = j + 1; k < n - 1; ++k) {
                        const double dik = ri[k];
                        const double djk = rj[k];
                        const double* rk = m.row(k);
                        for (int l = k + 1; l < n; ++l) {
                            const double s1 = dij + rk[l];
                            const double s2 = dik + rj[l];
                            const double s3 = ri[l] + djk;
                            double hi = s1, mid = s2;
                            if (mid > hi) {
                                std::swap(hi, mid);
                            }
                            if (s3 > hi) {
                                mid = hi;
                                hi = s3;
                            } else if (s3 > mid) {
                                mid = s3;
                            }
                            const double d = 0.5 * (hi - mid);
                            if (d >= local.delta) {
                                local.offer(d, i, j, k, l);
                            }
                        }
                    }
                }
            }
            partial[w] = local;
        };
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(body, w);
        }
        for (auto& t : pool) {
            t.join();
        }
        Best best;
        for (const auto& p : partial) {
            if (p.delta >= 0.0) {
                best.merge(p);
            }
        }
        rep.delta = std::max(0.0, best.delta);
        rep.witness = best.witness;
        return rep;
    }

    if (budget == 0) {
        throw std::invalid_argument("sampled mode needs a positive budget");
    }
    // Counter-based sampling: quadruple t depends only on (seed, t), so the
    // result is independent of the worker partition.
    std::vector<Best> partial(workers);
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next_block{0};
    constexpr std::uint64_t kBlock = 4096;
    auto body = [&](int w) {
        Best local;
        for (;;) {
            const std::uint64_t block = next_block.fetch_add(1);
            const std::uint64_t lo = block * kBlock;
            if (lo >= budget) {
                break;
            }
            const std::uint64_t hi_t = std::min(budget, lo + kBlock);
            for (std::uint64_t t = lo; t < hi_t; ++t) {
                const std::uint64_t base = seed * 0x9e3779b97f4a7c15ull + 4 * t;
                int q[4];
                int filled = 0;
                std::uint64_t salt = 0;
                while (filled < 4) {
                    const int cand = static_cast<int>(
                        splitmix64(base + filled + (salt << 32)) % static_cast<std::uint64_t>(n));
                    bool dup = false;
                    for (int x = 0; x < filled; ++x) {
                        dup = dup || q[x] == cand;
                    }
                    if (dup) {
                        ++salt;
                        continue;
                    }
                    q[filled++] = cand;
                }
                std::sort(q, q + 4);
                const double d = quad_delta(m, q[0], q[1], q[2], q[3]);
                local.offer(d, q[0], q[1], q[2], q[3]);
            }
        }
        partial[w] = local;
    };
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(body, w);
    }
    for (auto& t : pool) {
        t.join();
    }
    Best best;
    for (const auto& p : partial) {
        if (p.delta >= 0.0) {
            best.merge(p);
        }
    }
    rep.delta = std::max(0.0, best.delta);
    rep.witness = best.witness;
    rep.samples = budget;
    return rep;
}

double delta_thin(const WeightedGraph& g) {
    if (!g.connected()) {
        throw std::invalid_argument("thin-triangle constant needs a connected graph");
    }
    const int n = g.n;
    std::vector<std::vector<double>> dist(n);
    for (int i = 0; i < n; ++i) {
        dist[i] = g.dijkstra(i);
    }
    // canonical geodesics per unordered pair
    std::vector<std::vector<std::vector<int>>> path(n);
    for (int i = 0; i < n; ++i) {
        path[i].resize(n);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            path[i][j] = g.canonical_path(i, j);
        }
    }
    auto side = [&](int a, int b) -> const std::vector<int>& {
        return a < b ? path[a][b] : path[b][a];
    };

    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                const std::array<std::array<int, 2>, 3> sides{{{a, b}, {b, c}, {a, c}}};
                for (int s = 0; s < 3; ++s) {
                    const auto& own = side(sides[s][0], sides[s][1]);
                    const auto& o1 = side(sides[(s + 1) % 3][0], sides[(s + 1) % 3][1]);
                    const auto& o2 = side(sides[(s + 2) % 3][0], sides[(s + 2) % 3][1]);
                    for (int x : own) {
                        double d = std::numeric_limits<double>::infinity();
                        for (int y : o1) {
                            d = std::min(d, dist[x][y]);
                        }
                        for (int y : o2) {
                            d = std::min(d, dist[x][y]);
                        }
                        worst = std::max(worst, d);
                    }
                }
            }
        }
    }
    return worst;
}

RipsCheck check_rips(double delta_hyp, double delta_thin_lower) {
    if (delta_hyp < 0.0 || delta_thin_lower < 0.0) {
        throw std::invalid_argument("hyperbolicity constants must be non-negative");
    }
    RipsCheck rc;
    rc.delta_hyp = delta_hyp;
    rc.delta_thin_lower = delta_thin_lower;
    rc.pass = delta_thin_lower <= 4.0 * delta_hyp;
    rc.reverse_holds = delta_hyp <= 4.0 * delta_thin_lower;
    return rc;
}

} // namespace gromet
