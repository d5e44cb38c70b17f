#include <benchmark/benchmark.h>

#include "gromet/ball_profile.hpp"
#include "gromet/builders.hpp"
#include "gromet/delta.hpp"
#include "gromet/distance.hpp"
#include "gromet/finite_metric.hpp"
#include "gromet/synthetic.hpp"

using namespace gromet;

namespace {

// The four-point enumeration is the performance-critical kernel: C(n,4)
// quadruples per call.
void BM_FourPointExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteMetric m = FiniteMetric::from_graph(random_graph(n, n / 2, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_four_point(m, DeltaMode::exact, 0, 0, 1));
    }
    const double quads = static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3) / 24.0;
    state.counters["quad/s"] =
        benchmark::Counter(quads, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_FourPointExact)->Arg(60)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FourPointSampled(benchmark::State& state) {
    const FiniteMetric m = FiniteMetric::from_graph(random_graph(800, 400, 7));
    const std::uint64_t budget = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_four_point(m, DeltaMode::sampled, budget, 5, 1));
    }
    state.counters["samp/s"] = benchmark::Counter(
        static_cast<double>(budget), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_FourPointSampled)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DistanceField(benchmark::State& state) {
    BuildSpec spec;
    spec.kind = SurfaceKind::hyperbolic_disk;
    spec.radius = 3.0;
    spec.resolution = 1.0 / static_cast<double>(state.range(0));
    const TriMesh disk = build(spec);
    const int source = disk.label("basepoint")[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_field(disk, source));
    }
    state.counters["verts"] = static_cast<double>(disk.vertex_count());
}
BENCHMARK(BM_DistanceField)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BallProfile(benchmark::State& state) {
    BuildSpec spec;
    spec.kind = SurfaceKind::hyperbolic_disk;
    spec.radius = 3.0;
    spec.resolution = 0.05;
    const TriMesh disk = build(spec);
    const DistanceField field = distance_field(disk, disk.label("basepoint")[0]);
    std::vector<double> radii;
    for (int i = 1; i <= static_cast<int>(state.range(0)); ++i) {
        radii.push_back(2.5 * i / static_cast<double>(state.range(0)));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball_profile(disk, field, radii));
    }
}
BENCHMARK(BM_BallProfile)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
