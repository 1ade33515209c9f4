#include <benchmark/benchmark.h>

#include <vector>

#include "gsd/rng.hpp"
#include "gsd/transform.hpp"

namespace {

void BM_Fht(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  gsd::Rng rng(1);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.gaussian();
  for (auto _ : state) {
    gsd::fht(v);
    benchmark::DoNotOptimize(v.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_Fht)->RangeMultiplier(4)->Range(64, 65536);

void BM_ChildHeuristics(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  gsd::Rng rng(2);
  std::vector<double> segment(n);
  for (auto& x : segment) x = rng.gaussian();
  std::vector<double> scratch(n);
  std::vector<double> out(2 * n - 2);
  for (auto _ : state) {
    scratch = segment;
    gsd::child_heuristics_inplace(scratch, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ChildHeuristics)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
