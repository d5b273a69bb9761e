// Serial reference against OpenMP for the two exponential kernels.
#include <benchmark/benchmark.h>

#include "kanenobu/diagram/kanenobu_diagram.hpp"
#include "kanenobu/khovanov/complex.hpp"
#include "kanenobu/khovanov/homology.hpp"
#include "kanenobu/polyinv/jones.hpp"

using namespace kanenobu;

namespace {

Parallelism mode_of(const benchmark::State& s) { return s.range(1) ? Parallelism::OpenMP : Parallelism::Serial; }

// K(range(0), 3): 11 + range(0) crossings
void BM_StateHistogram(benchmark::State& state) {
  const PlanarDiagram d = kanenobu_diagram(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(state_histogram(d, mode_of(state)));
  state.counters["crossings"] = static_cast<double>(d.size());
  state.counters["states/s"] = benchmark::Counter(static_cast<double>(1ULL << d.size()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_RawHomology(benchmark::State& state) {
  const PlanarDiagram d = kanenobu_diagram(static_cast<int>(state.range(0)), -1);
  const GradedComplex c = build_complex(d);
  for (auto _ : state) benchmark::DoNotOptimize(raw_homology(c, mode_of(state)));
  state.counters["crossings"] = static_cast<double>(d.size());
}

void BM_BuildComplex(benchmark::State& state) {
  const PlanarDiagram d = kanenobu_diagram(static_cast<int>(state.range(0)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(d));
}

}  // namespace

BENCHMARK(BM_StateHistogram)->ArgsProduct({{1, 3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RawHomology)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildComplex)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
