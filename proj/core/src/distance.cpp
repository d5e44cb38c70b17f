#include "gromet/distance.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace gromet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dijkstra(const TriMesh& mesh, const std::vector<int>& sources,
                             const std::vector<char>* allowed, int stop_at = -1) {
    const auto& adj = mesh.adjacency();
    std::vector<double> dist(mesh.vertex_count(), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (int s : sources) {
        if (s < 0 || static_cast<std::size_t>(s) >= mesh.vertex_count()) {
            throw std::invalid_argument("source vertex out of range");
        }
        if (allowed && !(*allowed)[s]) {
            throw std::invalid_argument("source vertex " + std::to_string(s) +
                                        " not in allowed set");
        }
        dist[s] = 0.0;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        if (v == stop_at) {
            break;
        }
        for (const auto& [w, len] : adj[v]) {
            if (allowed && !(*allowed)[w]) {
                continue;
            }
            const double nd = d + len;
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist;
}

} // namespace

double DistanceField::max() const {
    double m = 0.0;
    for (double d : dist) {
        m = std::max(m, d);
    }
    return m;
}

DistanceField distance_field(const TriMesh& mesh, int source) {
    DistanceField field;
    field.source = source;
    field.dist = dijkstra(mesh, {source}, nullptr);
    for (std::size_t v = 0; v < field.dist.size(); ++v) {
        if (field.dist[v] == kInf) {
            throw std::runtime_error("mesh disconnected: vertex " + std::to_string(v) +
                                     " unreachable from source " + std::to_string(source));
        }
    }
    return field;
}

std::vector<double> multi_source_distance(const TriMesh& mesh,
                                          const std::vector<int>& sources) {
    if (sources.empty()) {
        throw std::invalid_argument("multi_source_distance needs at least one source");
    }
    return dijkstra(mesh, sources, nullptr);
}

std::optional<double> subsurface_distance(const TriMesh& mesh,
                                          const std::vector<char>& allowed, int u, int v) {
    if (allowed.size() != mesh.vertex_count()) {
        throw std::invalid_argument("allowed mask size mismatch");
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= mesh.vertex_count() ||
        static_cast<std::size_t>(v) >= mesh.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (!allowed[u] || !allowed[v]) {
        throw std::invalid_argument("endpoints must lie in the allowed set");
    }
    const auto dist = dijkstra(mesh, {u}, &allowed, v);
    if (dist[v] == kInf) {
        return std::nullopt;
    }
    return dist[v];
}

std::vector<double> restricted_multi_source_distance(const TriMesh& mesh,
                                                     const std::vector<char>& allowed,
                                                     const std::vector<int>& sources) {
    if (allowed.size() != mesh.vertex_count()) {
        throw std::invalid_argument("allowed mask size mismatch");
    }
    if (sources.empty()) {
        throw std::invalid_argument("needs at least one source");
    }
    return dijkstra(mesh, sources, &allowed);
}

} // namespace gromet
