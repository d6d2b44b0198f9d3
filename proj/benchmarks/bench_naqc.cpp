#include <benchmark/benchmark.h>

#include "naqc/scan.hpp"

using namespace naqc;

namespace {

void BM_GenerateMubs(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_mubs(d));
  }
}
BENCHMARK(BM_GenerateMubs)->Arg(2)->Arg(5)->Arg(11);

void BM_CostMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MUBSet mubs = generate_mubs(d);
  const BipartiteState rho = isotropic(d, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_matrix(rho, mubs, CoherenceMeasure::L1));
  }
}
BENCHMARK(BM_CostMatrix)->Arg(2)->Arg(3)->Arg(5)->Arg(7);

void BM_OptimizedReport(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MUBSet mubs = generate_mubs(d);
  const BipartiteState rho = isotropic(d, 0.9);
  const CostMatrix cost = cost_matrix(rho, mubs, CoherenceMeasure::RelativeEntropy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naqc_optimized_from_cost(cost, CoherenceMeasure::RelativeEntropy));
  }
}
BENCHMARK(BM_OptimizedReport)->Arg(3)->Arg(7);

void BM_EurWitness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MUBSet mubs = generate_mubs(d);
  const BipartiteState rho = isotropic(d, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eur_witness(rho, mubs));
  }
}
BENCHMARK(BM_EurWitness)->Arg(2)->Arg(5);

void BM_RandomSeparable(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_separable(3, 3, 4, seed++));
  }
}
BENCHMARK(BM_RandomSeparable);

}  // namespace

BENCHMARK_MAIN();
