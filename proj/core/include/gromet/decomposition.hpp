#pragma once

#include <string>
#include <vector>

#include "gromet/delta.hpp"
#include "gromet/finite_metric.hpp"

namespace gromet {

/// Candidate tree decomposition of a host graph: vertex subsets X_n whose
/// pairwise intersections are separating, with claimed bound k on the sum of
/// intrinsic intersection diameters per piece.
struct DecompositionSpec {
    std::vector<std::vector<int>> pieces;
    double k_claimed = 0.0;
};

struct DecompositionReport {
    bool valid = false;
    std::string reason; // empty when valid
    double k_measured = 0.0;
    std::vector<double> delta_pieces; // sampled four-point delta per piece
    double delta_host = 0.0;
};

/// Checks connectivity of each piece, the separation property of each
/// nonempty intersection, and k_measured <= k_claimed; measures sampled
/// four-point deltas of the pieces and the host as a side product.
DecompositionReport validate_tree_decomposition(const DecompositionSpec& spec,
                                                const WeightedGraph& host,
                                                std::uint64_t delta_budget = 200000,
                                                std::uint64_t seed = 1);

} // namespace gromet
