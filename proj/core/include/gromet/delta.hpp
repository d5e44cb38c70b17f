#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "gromet/finite_metric.hpp"

namespace gromet {

enum class DeltaMode { exact, sampled };

struct DeltaReport {
    double delta = 0.0;
    std::array<int, 4> witness{-1, -1, -1, -1};
    DeltaMode mode = DeltaMode::exact;
    std::uint64_t samples = 0; // quadruples inspected in sampled mode
};

/// Four-point hyperbolicity constant: per quadruple, half the gap between
/// the largest and second-largest of the three pair sums. Exact mode
/// enumerates all C(n,4) quadruples, partitioned over `threads` workers with
/// a deterministic max-reduction; sampled mode draws `budget` quadruples
/// from a counter-based generator, so the result is independent of the
/// thread count. n < 4 yields delta = 0.
DeltaReport delta_four_point(const FiniteMetric& m, DeltaMode mode,
                             std::uint64_t budget = 0, std::uint64_t seed = 0,
                             int threads = 0);

/// Evaluates the quadruple that a report names; witness reproduction must be
/// bit-exact.
double evaluate_quadruple(const FiniteMetric& m, const std::array<int, 4>& q);

/// Thin-triangle constant over canonical geodesics: for every vertex triple
/// and every vertex on one side, the distance to the union of the other two
/// sides. One canonical shortest path per pair makes this a lower bound for
/// the true thinness constant.
double delta_thin(const WeightedGraph& g);

/// Cross-check of the two hyperbolicity measurements: asserts the direction
/// delta_thin_lower <= 4 * delta_hyp that a lower bound can assert, and
/// reports (without asserting) whether delta_hyp <= 4 * delta_thin_lower.
struct RipsCheck {
    bool pass = false;       // delta_thin_lower <= 4 delta_hyp
    bool reverse_holds = false; // delta_hyp <= 4 delta_thin_lower (informational)
    double delta_hyp = 0.0;
    double delta_thin_lower = 0.0;
};
RipsCheck check_rips(double delta_hyp, double delta_thin_lower);

} // namespace gromet
