#include <benchmark/benchmark.h>

#include <vector>

#include "gsd/channel.hpp"
#include "gsd/decoder.hpp"
#include "gsd/oracle.hpp"
#include "gsd/rm_code.hpp"
#include "gsd/rng.hpp"

namespace {

void BM_NextStepGreedy(benchmark::State& state) {
  const gsd::RmCode code = gsd::make_code(3, 9);
  gsd::Rng rng(3);
  std::vector<double> y(code.length);
  for (auto& x : y) x = rng.gaussian();
  const gsd::Codeword zero(code.length);
  gsd::VisitedSet visited{zero};
  for (auto _ : state) {
    gsd::FhtCounter counter;
    auto out = gsd::next_step_greedy(code, y, zero, visited, 8, 8, counter);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_NextStepGreedy);

// one full decode of R(3,9) on the BSC near the waterfall
void BM_GraphSearch(benchmark::State& state) {
  const gsd::RmCode code = gsd::make_code(3, 9);
  const gsd::ChannelSpec channel{gsd::ChannelKind::kBsc, 0.19, 0.0};
  gsd::SearchParams params;
  params.budget_units = static_cast<double>(state.range(0));
  params.max_moves = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    gsd::Rng rng(gsd::substream_seed(17, trial++));
    gsd::BitVec info(code.dimension);
    for (std::size_t i = 0; i < code.dimension; ++i) info.set(i, rng.next_u64() & 1);
    const auto y = gsd::transmit(gsd::encode(code, info), channel, rng);
    auto result = gsd::graph_search(code, y, params, rng);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GraphSearch)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_MinWeightEnumeration(benchmark::State& state) {
  const gsd::RmCode code = gsd::make_code(2, 5);
  for (auto _ : state) {
    gsd::MinWeightEnumerator enumerator(code, /*dedup=*/true);
    std::uint64_t count = 0;
    while (enumerator.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MinWeightEnumeration);

}  // namespace

BENCHMARK_MAIN();
