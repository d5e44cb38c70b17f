#include "gromet/synthetic.hpp"

#include <cmath>
#include <stdexcept>

namespace gromet {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(mix64(seed * 0x2545f4914f6cdd1dull + counter) >> 11) *
           0x1.0p-53;
}

WeightedGraph random_tree(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("tree needs at least one node");
    }
    WeightedGraph g;
    g.n = n;
    g.adj.resize(n);
    std::uint64_t c = 0;
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(mix64(seed + 1000 + c++) % static_cast<std::uint64_t>(v));
        // dyadic weights: multiples of 1/64 in [0.1, 10]
        const double u = uniform01(seed, c++);
        const double w = std::round((0.1 + 9.9 * u) * 64.0) / 64.0;
        g.add_edge(parent, v, std::max(w, 0.125));
    }
    return g;
}

WeightedGraph random_graph(int n, int extra_edges, std::uint64_t seed) {
    WeightedGraph g = random_tree(n, seed);
    std::uint64_t c = 1u << 20;
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(mix64(seed + c++) % static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(mix64(seed + c++) % static_cast<std::uint64_t>(n));
        if (u == v) {
            continue;
        }
        bool dup = false;
        for (const auto& [w, len] : g.adj[u]) {
            (void)len;
            dup = dup || w == v;
        }
        if (dup) {
            continue;
        }
        const double w = std::round((0.1 + 9.9 * uniform01(seed, c++)) * 64.0) / 64.0;
        g.add_edge(u, v, std::max(w, 0.125));
    }
    return g;
}

Complex random_domain_point(const PlaneDomain& domain, std::uint64_t seed,
                            std::uint64_t counter) {
    for (int tries = 0; tries < 10000; ++tries) {
        const double x = 2.0 * uniform01(seed, counter * 131 + 2 * tries) - 1.0;
        const double y = 2.0 * uniform01(seed, counter * 131 + 2 * tries + 1) - 1.0;
        const Complex z(x, y);
        // keep a little margin so quadrature stays well conditioned
        if (domain.contains(z) && boundary_distance(domain, z) > 1e-3) {
            return z;
        }
    }
    throw std::runtime_error("could not sample a point inside the domain");
}

std::vector<Complex> random_polyline(const PlaneDomain& domain, int segments,
                                     std::uint64_t seed) {
    if (segments < 1) {
        throw std::invalid_argument("polyline needs at least one segment");
    }
    std::vector<Complex> pts;
    pts.push_back(random_domain_point(domain, seed, 0));
    std::uint64_t c = 1;
    while (static_cast<int>(pts.size()) <= segments) {
        const Complex z = pts.back();
        bool placed = false;
        for (int tries = 0; tries < 2000 && !placed; ++tries) {
            const double ang = 2.0 * 3.14159265358979323846 * uniform01(seed, c++);
            const double step = 0.02 + 0.25 * uniform01(seed, c++);
            const Complex w = z + std::polar(step, ang);
            if (domain.contains(w) && boundary_distance(domain, w) > 1e-3 &&
                segment_in_domain(domain, z, w)) {
                pts.push_back(w);
                placed = true;
            }
        }
        if (!placed) {
            // restart from a fresh point rather than loop forever
            pts.clear();
            pts.push_back(random_domain_point(domain, seed, c++));
        }
    }
    return pts;
}

} // namespace gromet
