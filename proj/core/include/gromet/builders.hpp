#pragma once

#include <string>
#include <vector>

#include "gromet/trimesh.hpp"

namespace gromet {

enum class SurfaceKind {
    hyperbolic_disk,
    flat_cylinder,
    funnel,
    cusp,
    ypiece,
    pants_tree,
    disk_minus_disks,
};

SurfaceKind surface_kind_from_string(const std::string& s);
std::string to_string(SurfaceKind k);

/// Round hole in the Euclidean picture of the unit disk; radius 0 marks an
/// isolated point (a puncture).
struct Hole {
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;
};

struct BuildSpec {
    SurfaceKind kind = SurfaceKind::hyperbolic_disk;
    double resolution = 0.05; // target max edge length

    double radius = 3.0; // geodesic radius of disk builders

    std::vector<Hole> holes; // disk_minus_disks
    bool delete_holes = true;

    double circumference = 2.0; // flat_cylinder
    double height = 10.0;

    double boundary_length = 1.0; // funnel: geodesic length; cusp: border length
    double t_max = 4.0;

    double l1 = 1.0, l2 = 1.0, l3 = 1.0; // ypiece boundary lengths

    int depth = 0;            // pants_tree
    double loop_length = 1.0; // pants_tree boundary length

    void validate() const;
};

/// Generates the mesh for the requested model surface. Every mesh carries a
/// "basepoint" label with one distinguished vertex. Boundary rings are
/// labeled "boundary0", "boundary1", ...; pants trees additionally label the
/// glued geodesic rings "glue0", ... and each pants vertex set "piece0", ...;
/// disk_minus_disks labels each hole's vertex set "e0", ... and (after
/// deletion) the jagged hole rim "hole0", ....
TriMesh build(const BuildSpec& spec);

/// Shortest vertex cycle winding once around the labeled hole, searched in
/// an annular neighborhood of the hole rim by cutting the annulus along a
/// radial shortest path. Falls back to the rim itself when the search
/// produces a non-simple or non-separating cycle.
struct SurroundingCurve {
    std::vector<int> cycle;
    double length = 0.0;
    bool separates = false; // no other labeled hole shares a component
};
SurroundingCurve mark_surrounding_curve(const TriMesh& mesh, const std::string& hole_label);

/// Identifies two equal-size boundary loops of the mesh (given as ordered
/// label cycles) to form a closed geodesic; used to manufacture handles from
/// genus-zero pieces. The new ring keeps a fresh "glueN" label.
TriMesh glue_boundary_loops(const TriMesh& mesh, const std::string& label_a,
                            const std::string& label_b);

/// Removes the triangles whose three corners all belong to the labeled
/// vertex set (jagged deletion of a marked region).
TriMesh remove_labeled_region(const TriMesh& mesh, const std::string& label);

} // namespace gromet
