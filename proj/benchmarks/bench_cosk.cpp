#include <benchmark/benchmark.h>

#include "cosk/bochner.hpp"
#include "cosk/holonomy.hpp"
#include "cosk/report.hpp"
#include "cosk/rng.hpp"

using namespace cosk;

namespace {

void BM_SecondKindAssembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CurvatureTensor r = build(SpaceSpec::sphere(n, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(second_kind(r).matrix.max_abs());
}
BENCHMARK(BM_SecondKindAssembly)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_JacobiEigh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = second_kind(build(SpaceSpec::cpn(n / 2))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(eigh(m).spectrum.values.back());
}
BENCHMARK(BM_JacobiEigh)->Arg(6)->Arg(8);

void BM_BochnerQuadratic(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const BochnerEvaluator ev(build(SpaceSpec::cpn(3)));
  Rng rng(1);
  PForm w(6, p);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(ev.second_kind_quadratic(w).total);
}
BENCHMARK(BM_BochnerQuadratic)->Arg(1)->Arg(2)->Arg(3);

void BM_HolonomyClosure(benchmark::State& state) {
  const CurvatureTensor r = build(SpaceSpec::cpn(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_algebra(r).dimension);
}
BENCHMARK(BM_HolonomyClosure)->Arg(2)->Arg(3)->Arg(4);

void BM_WeightPrincipleScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_weight_principle(static_cast<long long>(state.range(0)), 42).violations);
}
BENCHMARK(BM_WeightPrincipleScan)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
