#pragma once

#include <vector>

#include "gromet/comparison.hpp"
#include "gromet/distance.hpp"
#include "gromet/ode.hpp"
#include "gromet/trimesh.hpp"

namespace gromet {

/// Sampled geometry of the metric balls around a basepoint: boundary length
/// ell(r), area a(r), Euler characteristic chi(r) of the sublevel complex,
/// generator count n(r) = 1 - chi of the basepoint's component, and the
/// number of connected components.
struct BallProfile {
    std::vector<double> radii;
    std::vector<double> boundary_length;
    std::vector<double> area;
    std::vector<int> euler_char;
    std::vector<int> n_gen;
    std::vector<int> component_count;

    ScalarProfile area_profile() const;
    ScalarProfile ell_profile() const;
    ScalarProfile chi_profile() const;
};

/// Sublevel-set scan of the distance field. The region {d <= r} is the union
/// of per-triangle clips of the linear interpolant of d; lengths and areas
/// come from the flat layout of each triangle, chi from counting the clipped
/// cell complex. Radii that coincide with a vertex distance are perturbed by
/// +1e-9 * (shortest edge).
BallProfile ball_profile(const TriMesh& mesh, const DistanceField& field,
                         std::vector<double> radii);

/// Search for a radius r' strictly inside (r0, r0 + c/k) whose ball needs at
/// most topology_bound(params, ell(r0 + c/k)) + slack generators.
struct TopologyBoundReport {
    double r_prime = 0.0;
    int n_at_r_prime = 0;
    double bound = 0.0;
    double ell_outer = 0.0;
    double slack = 1.0;
    bool pass = false;
    std::vector<double> scanned_radii;
    std::vector<int> scanned_n;
};

TopologyBoundReport scan_topology_bound(const TriMesh& mesh, const DistanceField& field,
                                        const ComparisonParams& params,
                                        double slack = 1.0, int grid_points = 25);

} // namespace gromet
