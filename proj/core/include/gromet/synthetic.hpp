#pragma once

#include <cstdint>
#include <vector>

#include "gromet/finite_metric.hpp"
#include "gromet/plane_domain.hpp"

namespace gromet {

/// Uniform random tree on n nodes. Edge lengths are multiples of 1/64 inside
/// [0.1, 10], so path sums stay exact in binary floating point and tree
/// metrics are 0-hyperbolic with zero tolerance.
WeightedGraph random_tree(int n, std::uint64_t seed);

/// Random connected graph: a tree plus `extra_edges` random chords.
WeightedGraph random_graph(int n, int extra_edges, std::uint64_t seed);

/// Random point of the domain (rejection sampling in the bounding box).
Complex random_domain_point(const PlaneDomain& domain, std::uint64_t seed,
                            std::uint64_t counter);

/// Random polyline of `segments` segments staying inside the domain.
std::vector<Complex> random_polyline(const PlaneDomain& domain, int segments,
                                     std::uint64_t seed);

/// Deterministic 64-bit mixer used for all synthetic data.
std::uint64_t mix64(std::uint64_t x);
/// Uniform double in [0, 1) from a (seed, counter) pair.
double uniform01(std::uint64_t seed, std::uint64_t counter);

} // namespace gromet
