#pragma once

#include <vector>

#include "gromet/trimesh.hpp"

namespace gromet {

/// Both sides of the combinatorial Gauss-Bonnet identity on a triangle
/// subregion: interior angle defects plus boundary turning equal 2 pi chi.
struct GaussBonnetReport {
    double curvature_term = 0.0; // sum over interior vertices of 2 pi - angles
    double turning_term = 0.0;   // sum over boundary vertices of pi - angles
    int chi = 0;                 // V - E + F of the subcomplex
    double lhs = 0.0;            // curvature_term + turning_term
    double rhs = 0.0;            // 2 pi chi
    double residual = 0.0;       // lhs - rhs
};

/// `region` lists triangle indices (duplicates rejected). The region must be
/// vertex-manifold: a pinched fan raises an error.
GaussBonnetReport discrete_gauss_bonnet(const TriMesh& mesh,
                                        const std::vector<int>& region);

} // namespace gromet
