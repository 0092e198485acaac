#include <benchmark/benchmark.h>

#include "edgeav/sched.hpp"

namespace {

void BM_sched(benchmark::State& state) {
  edgeav::SchedParams p;
  p.cores = 1;
  p.vehicles = state.range(0);
  p.transfer_ms = 120;
  p.exec_ms = 16;
  p.deadline_ms = 320;
  p.working_ms = 60000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgeav::sched(p));
  }
}
BENCHMARK(BM_sched)->Arg(1)->Arg(10)->Arg(100)->Arg(1800);

}  // namespace
