#include <benchmark/benchmark.h>

#include "fluct/cavity.hpp"
#include "fluct/manybody.hpp"
#include "fluct/pairwise.hpp"

namespace {

using namespace fluct;

void BM_vdw_energy(benchmark::State& state) {
  const auto m = PolarizabilityModel::single_resonance(4.0, 0.5);
  const PairSpec pair{m, m, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(vdw_energy(pair).value);
}
BENCHMARK(BM_vdw_energy)->Arg(10)->Arg(1000)->Arg(100000);

void BM_free_energy_T0(benchmark::State& state) {
  const auto m = PolarizabilityModel::single_resonance(4.5, 0.4);
  std::vector<Site> sites;
  for (int i = 0; i < state.range(0); ++i) sites.push_back({Vector3(6.0 * i, 1.5 * (i % 2), 0.7 * i * i), m});
  const SystemGeometry geom(std::move(sites));
  for (auto _ : state) benchmark::DoNotOptimize(free_energy_T0(geom).value);
}
BENCHMARK(BM_free_energy_T0)->Arg(2)->Arg(4)->Arg(8);

void BM_exact_ground_energy(benchmark::State& state) {
  const CavitySystem system({{0.1, Vector3(0, 0, 1)}, {0.12, Vector3(0, 0, 1)}},
                            {Vector3::Zero(), Vector3(10, 0, 0)},
                            {2.0, Vector3(0, 0, 1), {0.05, 0.05}});
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_ground_energy(system, n_max));
}
BENCHMARK(BM_exact_ground_energy)->Arg(8)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
