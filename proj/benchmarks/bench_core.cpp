#include <benchmark/benchmark.h>

#include "transmon/dawson.hpp"
#include "transmon/decay_spectrum.hpp"
#include "transmon/spectral_grid.hpp"

namespace {

using namespace transmon;

void BM_Dawson(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dawson(x));
  }
}
BENCHMARK(BM_Dawson)->Arg(5)->Arg(30)->Arg(59)->Arg(61)->Arg(200);

void BM_Delta2Full(benchmark::State& state) {
  const auto m = DimensionlessModel::transmon_default();
  const FullSelfEnergy full(m, CouplingConfig::transmon(static_cast<double>(state.range(0)), true),
                            QuadratureSettings{});
  double y = m.b() - 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(full.delta2(y));
    y += 1e-3;
    if (y > m.b() + 2.0) y = m.b() - 2.0;
  }
}
BENCHMARK(BM_Delta2Full)->Arg(1)->Arg(6);

void BM_BuildGridStable(benchmark::State& state) {
  const auto m = DimensionlessModel::transmon_default();
  const DecaySpectrum spec(m, CouplingConfig::transmon(static_cast<double>(state.range(0)), false),
                           Regime::stable_second_level, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_grid(spec));
  }
}
BENCHMARK(BM_BuildGridStable)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BuildGridFull(benchmark::State& state) {
  const auto m = DimensionlessModel::transmon_default();
  const DecaySpectrum spec(m, CouplingConfig::transmon(6.0, true), Regime::full_coupling, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_grid(spec));
  }
}
BENCHMARK(BM_BuildGridFull)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
