#include <benchmark/benchmark.h>

#include <vector>

#include "diskres/cavity.hpp"
#include "diskres/fieldgrid.hpp"
#include "diskres/husimi.hpp"
#include "diskres/specfun.hpp"

namespace {

using diskres::Complex;

void BM_BesselJ(benchmark::State& state) {
  const int m = int(state.range(0));
  const Complex z(double(state.range(1)), -0.1);
  for (auto _ : state) benchmark::DoNotOptimize(diskres::specfun::bessel_j(m, z));
}
BENCHMARK(BM_BesselJ)->Args({2, 1})->Args({2, 10})->Args({20, 30})->Args({60, 150});

void BM_Hankel1Pair(benchmark::State& state) {
  const int m = int(state.range(0));
  const Complex z(double(state.range(1)), -0.1);
  for (auto _ : state) benchmark::DoNotOptimize(diskres::specfun::hankel1_pair(m, z));
}
BENCHMARK(BM_Hankel1Pair)->Args({2, 1})->Args({2, 10})->Args({20, 30})->Args({60, 150});

void BM_BesselZero(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diskres::specfun::bessel_j_zero(int(state.range(0)), 5));
}
BENCHMARK(BM_BesselZero)->Arg(0)->Arg(10)->Arg(60);

void BM_Determinant(benchmark::State& state) {
  const Complex z(1.46, -0.046);
  for (auto _ : state) benchmark::DoNotOptimize(diskres::cavity::evaluate_determinant(2, 3.3, z));
}
BENCHMARK(BM_Determinant);

void BM_FindResonance(benchmark::State& state) {
  diskres::cavity::FindOptions opts;
  opts.verify_rank = state.range(1) != 0;
  const diskres::ModeIndex mode{int(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(diskres::cavity::find_resonance(mode, 3.3, opts));
}
BENCHMARK(BM_FindResonance)->Args({2, 0})->Args({2, 1})->Args({10, 0})->Args({10, 1});

void BM_FieldGrid(benchmark::State& state) {
  const diskres::fieldgrid::GridSpec spec{1.5, int(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(diskres::fieldgrid::sample_raw(diskres::fieldgrid::RadialKind::full, 2, 3.3,
                                                            Complex(1.4623, -0.0464), spec));
  }
}
BENCHMARK(BM_FieldGrid)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Husimi(benchmark::State& state) {
  const auto psi = diskres::husimi::boundary_trace(2, 3.3, Complex(1.4623, -0.0464), 1024);
  const int size = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diskres::husimi::boundary_husimi(psi, 3.3, 1.4623, {size, size}));
  }
}
BENCHMARK(BM_Husimi)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
