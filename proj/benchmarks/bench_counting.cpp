#include <benchmark/benchmark.h>

#include "hyperis/counting.hpp"
#include "hyperis/instances.hpp"
#include "hyperis/reduction.hpp"

namespace {

void BM_CountGadgetCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gadget = hyperis::build_gadget(hyperis::gen_cycle(n), {4, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hyperis::count_independent_sets(gadget.hypergraph));
  }
}
BENCHMARK(BM_CountGadgetCycle)->DenseRange(4, 10, 2);

void BM_CountCubicGadget(benchmark::State& state) {
  // the largest acceptance instance: 30 vertices, 15 six-vertex edges
  const auto g = hyperis::gen_random_regular(10, 3, 42);
  const auto gadget = hyperis::build_gadget(g, {6, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hyperis::count_independent_sets(gadget.hypergraph));
  }
}
BENCHMARK(BM_CountCubicGadget);

void BM_EnumerateTriangleGadget(benchmark::State& state) {
  const auto gadget = hyperis::build_gadget(hyperis::gen_cycle(5), {4, 1});
  for (auto _ : state) {
    std::uint64_t sets = 0;
    hyperis::enumerate_independent_sets(gadget.hypergraph,
                                        [&](hyperis::VertexMask) { ++sets; });
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_EnumerateTriangleGadget);

void BM_VerifyIdentity(benchmark::State& state) {
  const auto g = hyperis::gen_random_regular(10, 3, 42);
  hyperis::VerifyOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperis::verify_identity(g, {6, 3}, options));
  }
}
BENCHMARK(BM_VerifyIdentity)->Arg(1)->Arg(4);

}  // namespace
