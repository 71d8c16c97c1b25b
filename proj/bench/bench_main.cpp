// Serial reference versus OpenMP kernels: boolean matrix products and
// campaign evaluation (one instance per thread).

#include <random>

#include <benchmark/benchmark.h>

#include "wasync/harness/runner.hpp"
#include "wasync/matrix/bool_matrix.hpp"

namespace {

using namespace wasync;

BoolMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

template <BoolMatrix (*Mul)(const BoolMatrix&, const BoolMatrix&)>
void BM_BoolMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BoolMatrix a = random_matrix(n, 0.05, 1), b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoolMul<bool_mul_serial>)->Name("bool_mul/serial")->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BoolMul<bool_mul>)->Name("bool_mul/parallel")->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_Campaign(benchmark::State& state, const char* name, bool serial) {
  CampaignParams params;
  params.serial = serial;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(name, params));
}
BENCHMARK_CAPTURE(BM_Campaign, engine_oracle_serial, "engine-oracle", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Campaign, engine_oracle_parallel, "engine-oracle", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Campaign, chromatic_rank_serial, "chromatic-rank-binary", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Campaign, chromatic_rank_parallel, "chromatic-rank-binary", false)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
