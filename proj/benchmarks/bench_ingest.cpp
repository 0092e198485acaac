#include <benchmark/benchmark.h>

#include "edgeav/demand.hpp"
#include "edgeav/geometry.hpp"
#include "edgeav/synth.hpp"

namespace {

void BM_synthesize_and_aggregate(benchmark::State& state) {
  const edgeav::AreaGrid grid({{"A1", 0, 0}, {"A2", 2000, 0}}, 2000);
  edgeav::SynthProfile profile;
  profile.seed = 5;
  profile.areas["A1"][8] = {static_cast<double>(state.range(0)), 8.0};
  profile.areas["A2"][8] = {static_cast<double>(state.range(0)) / 2, 10.0};
  for (auto _ : state) {
    edgeav::DemandAccumulator acc(grid);
    for (const auto& rec : edgeav::synthesize_trace(profile, grid)) {
      acc.add(rec, grid.locate(rec.x, rec.y));
    }
    benchmark::DoNotOptimize(acc.finish());
  }
}
BENCHMARK(BM_synthesize_and_aggregate)->Arg(100)->Arg(1000);

}  // namespace
