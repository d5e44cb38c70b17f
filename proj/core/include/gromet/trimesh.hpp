#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gromet {

/// Intrinsic triangulated surface: vertices carry no coordinates, the
/// geometry lives entirely in per-edge lengths. Validation enforces a
/// connected orientable manifold complex whose triangles satisfy the strict
/// triangle inequality. Immutable after build().
class TriMesh {
public:
    struct Input {
        std::size_t vertex_count = 0;
        std::vector<std::array<int, 3>> triangles;
        // one entry per undirected triangle edge: {u, v, length}
        std::vector<std::tuple<int, int, double>> edge_lengths;
        std::map<std::string, std::vector<int>> labels;
    };

    static TriMesh build(Input in);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    const std::vector<double>& edge_lengths() const { return elen_; }
    const std::map<std::string, std::vector<int>>& labels() const { return labels_; }

    const std::vector<int>& label(const std::string& name) const;
    bool has_label(const std::string& name) const;

    int edge_index(int u, int v) const; // -1 when absent
    double edge_length(int u, int v) const;

    /// Edge indices per triangle; entry i is the edge opposite corner i.
    const std::vector<std::array<int, 3>>& triangle_edges() const { return tri_edges_; }
    /// Up to two incident triangles per edge, -1 for none.
    const std::vector<std::array<int, 2>>& edge_triangles() const { return edge_tris_; }
    /// Corner angles per triangle (law of cosines on the edge lengths).
    const std::vector<std::array<double, 3>>& corner_angles() const { return angles_; }
    /// Triangle areas (stable Heron formula).
    const std::vector<double>& triangle_areas() const { return areas_; }

    const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
        return adj_;
    }

    bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }
    bool is_boundary_edge(int e) const { return edge_tris_[e][1] < 0; }

    /// Boundary loops as ordered vertex cycles.
    std::vector<std::vector<int>> boundary_loops() const;

    /// Angle defect 2 pi - angle sum (interior) resp. pi - angle sum
    /// (boundary) at a vertex.
    double angle_defect(int v) const;
    /// One third of the incident triangle area, the barycentric dual cell.
    double dual_area(int v) const;

    /// Neighbors of v in rotation order induced by the global orientation;
    /// for a boundary vertex the chain is open and starts/ends on boundary
    /// edges.
    std::vector<int> ordered_neighbors(int v) const;

    /// New mesh with the given triangles removed; vertices left without any
    /// incident triangle are dropped and labels are re-indexed (entries for
    /// dropped vertices disappear, empty labels are kept).
    TriMesh remove_triangles(const std::vector<char>& remove_flag) const;

private:
    TriMesh() = default;
    void finalize();

    std::size_t n_ = 0;
    std::vector<std::array<int, 3>> tris_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<double> elen_;
    std::map<std::string, std::vector<int>> labels_;

    std::vector<std::array<int, 3>> tri_edges_;
    std::vector<std::array<int, 2>> edge_tris_;
    std::vector<std::array<double, 3>> angles_;
    std::vector<double> areas_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<char> boundary_vertex_;
    std::vector<std::vector<std::pair<int, int>>> vertex_tris_; // (tri, corner)
    std::unordered_map<std::uint64_t, int> edge_of_;
};

} // namespace gromet
