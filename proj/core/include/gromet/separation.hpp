#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gromet/trimesh.hpp"

namespace gromet {

/// Candidate witness that the marked sets E_n with neighborhoods V_n are
/// (r, s, N)-uniformly separated in the host surface.
struct SeparationSpec {
    const TriMesh* host = nullptr;
    std::vector<std::vector<int>> e_sets;
    std::vector<std::vector<int>> v_sets;
    double r = 0.0;
    double s = 0.0;
    int N = 1;

    void validate() const; // E_n subset of V_n, V_n pairwise disjoint
};

struct SeparationConditions {
    bool clearance = false;       // d(boundary of V_n, E_n) >= r for all n
    bool boundary_length = false; // L(boundary of V_n) <= s
    bool loop_count = false;      // boundary of V_n has <= N loops
    bool complement_connected = false; // V_n minus E_n connected
    bool mutual_distance = false; // d(V_n, V_m) >= r for n != m
};

struct SeparationReport {
    bool pass = false;
    SeparationConditions conditions;
    double min_clearance = 0.0;       // min_n d(boundary V_n, E_n)
    double max_boundary_length = 0.0; // max_n L(boundary V_n)
    int max_loop_count = 0;
    double min_mutual_distance = 0.0; // min over pairs, +inf for one set
    std::vector<int> loops_per_set;
    std::vector<double> boundary_length_per_set;
};

SeparationReport validate_uniform_separation(const SeparationSpec& spec);

/// Supremum over neighborhoods and pairs of their boundary loops that are
/// joinable outside the neighborhood, of the intrinsic distance between
/// those loops inside V_n minus E_n. Empty supremum (always the case on
/// genus-zero hosts) yields 0; an unreachable qualifying pair sets the
/// infinite flag.
struct DStarReport {
    double value = 0.0;
    bool infinite = false;
    int qualifying_pairs = 0;
};
DStarReport estimate_D_star(const SeparationSpec& spec);

} // namespace gromet
