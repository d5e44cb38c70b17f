#include "gromet/finite_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "gromet/distance.hpp"

namespace gromet {

void WeightedGraph::add_edge(int u, int v, double w) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw std::invalid_argument("edge endpoints out of range");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("edge weight must be positive");
    }
    if (static_cast<int>(adj.size()) != n) {
        adj.resize(n);
    }
    adj[u].push_back({v, w});
    adj[v].push_back({u, w});
}

std::vector<double> WeightedGraph::dijkstra(int source) const {
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        for (const auto& [w, len] : adj[v]) {
            if (d + len < dist[w]) {
                dist[w] = d + len;
                heap.push({d + len, w});
            }
        }
    }
    return dist;
}

std::vector<int> WeightedGraph::canonical_path(int s, int t) const {
    // Deterministic geodesic per unordered pair: root the search at the
    // smaller endpoint, break distance ties by the smaller predecessor id.
    const bool flip = s > t;
    if (flip) {
        std::swap(s, t);
    }
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[s] = 0.0;
    heap.push({0.0, s});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        for (const auto& [w, len] : adj[v]) {
            const double nd = d + len;
            if (nd < dist[w] - 1e-15 * (1.0 + std::abs(nd))) {
                dist[w] = nd;
                parent[w] = v;
                heap.push({nd, w});
            } else if (std::abs(nd - dist[w]) <= 1e-15 * (1.0 + std::abs(nd)) &&
                       v < parent[w]) {
                parent[w] = v;
            }
        }
    }
    if (std::isinf(dist[t])) {
        throw std::invalid_argument("graph is disconnected");
    }
    std::vector<int> path;
    for (int v = t; v >= 0; v = parent[v]) {
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    if (flip) {
        std::reverse(path.begin(), path.end());
    }
    return path;
}

bool WeightedGraph::connected() const {
    if (n == 0) {
        return true;
    }
    const auto dist = dijkstra(0);
    for (double d : dist) {
        if (std::isinf(d)) {
            return false;
        }
    }
    return true;
}

FiniteMetric FiniteMetric::from_matrix(int n, std::vector<double> dense) {
    if (n < 1 || dense.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("dense matrix must be n x n");
    }
    FiniteMetric m;
    m.n_ = n;
    m.d_ = std::move(dense);
    m.validate();
    return m;
}

FiniteMetric FiniteMetric::from_graph(const WeightedGraph& g) {
    FiniteMetric m;
    m.n_ = g.n;
    m.d_.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (int i = 0; i < g.n; ++i) {
        const auto dist = g.dijkstra(i);
        for (int j = 0; j < g.n; ++j) {
            if (std::isinf(dist[j])) {
                throw std::invalid_argument("graph is disconnected");
            }
            m.d_[static_cast<std::size_t>(i) * g.n + j] = dist[j];
        }
    }
    // enforce exact symmetry against per-source rounding drift
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            const double v = m.d_[static_cast<std::size_t>(i) * g.n + j];
            m.d_[static_cast<std::size_t>(j) * g.n + i] = v;
        }
    }
    m.validate();
    return m;
}

FiniteMetric FiniteMetric::from_mesh_sample(const TriMesh& mesh,
                                            const std::vector<int>& sample) {
    const int n = static_cast<int>(sample.size());
    if (n < 1) {
        throw std::invalid_argument("empty sample");
    }
    FiniteMetric m;
    m.n_ = n;
    m.d_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const DistanceField f = distance_field(mesh, sample[i]);
        for (int j = 0; j < n; ++j) {
            m.d_[static_cast<std::size_t>(i) * n + j] = f.dist[sample[j]];
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = m.d_[static_cast<std::size_t>(i) * n + j];
            m.d_[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    m.validate();
    return m;
}

void FiniteMetric::validate() const {
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0.0) {
            throw std::invalid_argument("metric diagonal must be exactly zero");
        }
        for (int j = i + 1; j < n_; ++j) {
            const double v = (*this)(i, j);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("distances must be finite and non-negative");
            }
            if (v != (*this)(j, i)) {
                throw std::invalid_argument("metric must be symmetric");
            }
        }
    }
    auto check_triple = [&](int i, int j, int k) {
        const double slack = 1e-12 * (1.0 + (*this)(i, j) + (*this)(j, k));
        if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k) + slack) {
            throw std::invalid_argument(
                "triangle inequality violated at (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + ")");
        }
    };
    if (n_ <= 500) {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (j == i) {
                    continue;
                }
                for (int k = 0; k < n_; ++k) {
                    if (k == i || k == j) {
                        continue;
                    }
                    check_triple(i, j, k);
                }
            }
        }
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&state]() {
            state += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        for (int s = 0; s < 200000; ++s) {
            const int i = static_cast<int>(next() % n_);
            const int j = static_cast<int>(next() % n_);
            const int k = static_cast<int>(next() % n_);
            if (i != j && j != k && i != k) {
                check_triple(i, j, k);
            }
        }
    }
}

double FiniteMetric::diameter() const {
    double m = 0.0;
    for (double v : d_) {
        m = std::max(m, v);
    }
    return m;
}

FiniteMetric FiniteMetric::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("scale factor must be positive");
    }
    FiniteMetric m;
    m.n_ = n_;
    m.d_.resize(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) {
        m.d_[i] = d_[i] * factor;
    }
    return m;
}

double gromov_product(const FiniteMetric& m, int x, int y, int w) {
    if (x < 0 || y < 0 || w < 0 || x >= m.size() || y >= m.size() || w >= m.size()) {
        throw std::invalid_argument("index out of range");
    }
    return 0.5 * (m(x, w) + m(y, w) - m(x, y));
}

WeightedGraph mesh_graph(const TriMesh& mesh) {
    WeightedGraph g;
    g.n = static_cast<int>(mesh.vertex_count());
    g.adj.resize(g.n);
    for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
        g.add_edge(mesh.edges()[e][0], mesh.edges()[e][1], mesh.edge_lengths()[e]);
    }
    return g;
}

std::vector<int> farthest_point_sample(const TriMesh& mesh, int start, int count) {
    if (count < 1 || static_cast<std::size_t>(count) > mesh.vertex_count()) {
        throw std::invalid_argument("sample count out of range");
    }
    std::vector<int> sample{start};
    std::vector<double> best = distance_field(mesh, start).dist;
    while (static_cast<int>(sample.size()) < count) {
        int far = 0;
        for (std::size_t v = 1; v < best.size(); ++v) {
            if (best[v] > best[far]) {
                far = static_cast<int>(v);
            }
        }
        sample.push_back(far);
        const DistanceField f = distance_field(mesh, far);
        for (std::size_t v = 0; v < best.size(); ++v) {
            best[v] = std::min(best[v], f.dist[v]);
        }
    }
    std::sort(sample.begin(), sample.end());
    return sample;
}

} // namespace gromet
