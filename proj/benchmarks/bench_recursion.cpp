#include <benchmark/benchmark.h>

#include "hyperis/instances.hpp"
#include "hyperis/interval.hpp"
#include "hyperis/recursion.hpp"
#include "hyperis/spin.hpp"

namespace {

void BM_TwoStepGap(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const long d = 5L << (k - 1);
  const hyperis::Interval z = hyperis::Interval::exact_int(5L << 1, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperis::two_step_gap(z, k, 1, d));
  }
}
BENCHMARK(BM_TwoStepGap)->Arg(2)->Arg(8)->Arg(16);

void BM_FindRoots(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hyperis::find_roots(hyperis::MapKind::TwoStep, k, 1, 5L << (k - 1)));
  }
}
BENCHMARK(BM_FindRoots)->Arg(2)->Arg(4)->Arg(6);

void BM_CertifyProbe(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperis::certify_probe(k, k / 2));
  }
}
BENCHMARK(BM_CertifyProbe)->Arg(4)->Arg(8)->Arg(16);

void BM_PartitionFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = hyperis::gen_random_regular(n, 3, 7);
  const auto params = hyperis::paper_params(5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperis::partition_function(g, params));
  }
}
BENCHMARK(BM_PartitionFunction)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
