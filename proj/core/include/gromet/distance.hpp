#pragma once

#include <optional>
#include <vector>

#include "gromet/trimesh.hpp"

namespace gromet {

/// Single-source shortest-path distances over the edge graph.
struct DistanceField {
    int source = 0;
    std::vector<double> dist;

    double max() const;
};

DistanceField distance_field(const TriMesh& mesh, int source);

/// Shortest distance from a set of seed vertices (all seeds at distance 0).
std::vector<double> multi_source_distance(const TriMesh& mesh,
                                          const std::vector<int>& sources);

/// Shortest path between u and v using only edges with both endpoints in
/// `allowed`; nullopt when v is unreachable that way.
std::optional<double> subsurface_distance(const TriMesh& mesh,
                                          const std::vector<char>& allowed, int u, int v);

/// Distances from the seed set restricted to `allowed`; +inf marks vertices
/// that cannot be reached inside the subset.
std::vector<double> restricted_multi_source_distance(const TriMesh& mesh,
                                                     const std::vector<char>& allowed,
                                                     const std::vector<int>& sources);

} // namespace gromet
