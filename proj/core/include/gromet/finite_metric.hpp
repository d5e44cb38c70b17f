#pragma once

#include <cstdint>
#include <vector>

#include "gromet/trimesh.hpp"

namespace gromet {

/// Weighted undirected graph, the hosting structure for thin-triangle and
/// tree-decomposition measurements.
struct WeightedGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;

    void add_edge(int u, int v, double w);
    std::vector<double> dijkstra(int source) const;
    /// Shortest path with deterministic lexicographic tie-breaking on the
    /// predecessor, so every ordered pair has one canonical geodesic.
    std::vector<int> canonical_path(int s, int t) const;
    bool connected() const;
};

/// Dense symmetric metric on a finite point set. Validation enforces
/// symmetry, a zero diagonal rounded to zero, and the triangle inequality
/// (all triples for n <= 500, seeded random triples beyond).
class FiniteMetric {
public:
    static FiniteMetric from_matrix(int n, std::vector<double> dense);
    static FiniteMetric from_graph(const WeightedGraph& g);
    /// Restriction of the mesh's graph metric to a vertex sample.
    static FiniteMetric from_mesh_sample(const TriMesh& mesh,
                                         const std::vector<int>& sample);

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    const double* row(int i) const { return d_.data() + static_cast<std::size_t>(i) * n_; }
    const std::vector<double>& data() const { return d_; }

    double diameter() const;
    FiniteMetric scaled(double factor) const;

private:
    FiniteMetric() = default;
    void validate() const;

    int n_ = 0;
    std::vector<double> d_;
};

/// Gromov product (x|y)_w = (d(x,w) + d(y,w) - d(x,y)) / 2.
double gromov_product(const FiniteMetric& m, int x, int y, int w);

/// Deterministic farthest-point sample of `count` vertices, seeded by the
/// start vertex.
std::vector<int> farthest_point_sample(const TriMesh& mesh, int start, int count);

/// The mesh edge graph as a WeightedGraph.
WeightedGraph mesh_graph(const TriMesh& mesh);

} // namespace gromet
