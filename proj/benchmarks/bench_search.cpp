#include <benchmark/benchmark.h>

#include "edgeav/search.hpp"

namespace {

void BM_configuration_search(benchmark::State& state) {
  edgeav::SearchParams p;
  p.blind_m = 4;
  p.vehicles = static_cast<double>(state.range(0));
  p.speed_mps = 9.0;
  p.max_sched_calls = 100'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgeav::configuration_search(p));
  }
}
BENCHMARK(BM_configuration_search)->Arg(10)->Arg(100)->Arg(400);

}  // namespace
