#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "edgeav/sched.hpp"
#include "sched_oracle.hpp"

using edgeav::JobEvent;
using edgeav::sched;
using edgeav::SchedOutcome;
using edgeav::SchedParams;
using edgeav::sched_trace;
using edgeav::testing::sched_oracle;

namespace {

// Deterministic parameter scrambler for property-style sweeps.
struct Mix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("single vehicle with transfer: every response is t + E") {
  std::vector<JobEvent> log;
  const SchedOutcome out = sched_trace({1, 10, 16, 1, 100, 60000}, log);
  CHECK(out.deadline_misses == 0);
  CHECK(out.max_response_ms == 26);
  CHECK(out.jobs_completed == 2307);
  for (const auto& e : log) {
    CHECK(e.finish_ms - e.offload_ms == 26);
    CHECK_FALSE(e.missed);
  }
}

TEST_CASE("single vehicle, tight deadline: back-to-back jobs all miss") {
  // Hand trace: jobs start at 0,16,...,144; ten complete; each finishes
  // 16 ms after offload against a 10 ms deadline.
  const SchedOutcome out = sched({1, 0, 16, 1, 10, 160});
  CHECK(out.jobs_completed == 10);
  CHECK(out.deadline_misses == 10);
  CHECK(out.max_response_ms == 16);
}

TEST_CASE("vehicles spread over cores collapse to the single-vehicle case") {
  const SchedOutcome out = sched({3, 0, 16, 3, 100, 60000});
  CHECK(out.deadline_misses == 0);
  CHECK(out.max_response_ms == 16);
  CHECK(out.jobs_completed == 3750);
}

TEST_CASE("two vehicles, one core: frozen hand trace and oracle agree") {
  const SchedParams p{1, 5, 16, 2, 60, 200};
  const SchedOutcome out = sched(p);
  // First jobs arrive at 5; starts 5,21,...,181; the second vehicle's first
  // job waits one slot and responds in 37 ms; steady state responds in 32.
  CHECK(out.jobs_completed == 12);
  CHECK(out.deadline_misses == 0);
  CHECK(out.max_response_ms == 37);

  const SchedOutcome ref = sched_oracle(p);
  CHECK(ref.deadline_misses == out.deadline_misses);
  CHECK(ref.max_response_ms == out.max_response_ms);
  CHECK(ref.jobs_completed == out.jobs_completed);
}

TEST_CASE("no job fits in the working period") {
  // First start would be at t = 100 > W - E.
  const SchedOutcome out = sched({1, 100, 16, 1, 50, 110});
  CHECK(out.jobs_completed == 0);
  CHECK(out.deadline_misses == 0);
  CHECK(out.max_response_ms == 0);
}

TEST_CASE("a start exactly at W - E still runs") {
  const SchedOutcome out = sched({1, 0, 16, 1, 100, 16});
  CHECK(out.jobs_completed == 1);
  CHECK(out.max_response_ms == 16);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(sched({0, 0, 16, 1, 10, 100}), std::invalid_argument);
  CHECK_THROWS_AS(sched({1, 0, 0, 1, 10, 100}), std::invalid_argument);
  CHECK_THROWS_AS(sched({1, 0, 16, 0, 10, 100}), std::invalid_argument);
  CHECK_THROWS_AS(sched({1, 0, 16, 1, 0, 100}), std::invalid_argument);
  CHECK_THROWS_AS(sched({1, -1, 16, 1, 10, 100}), std::invalid_argument);
  CHECK_THROWS_AS(sched({1, 0, 16, 1, 10, 8}), std::invalid_argument);
}

TEST_CASE("event log is consistent with the outcome") {
  std::vector<JobEvent> log;
  const SchedOutcome out = sched_trace({2, 7, 16, 5, 45, 400}, log);
  CHECK(static_cast<std::int64_t>(log.size()) == out.jobs_completed);
  std::int64_t misses = 0, rmax = 0;
  std::int64_t prev_finish = 0;
  for (const auto& e : log) {
    CHECK(e.arrive_ms == e.offload_ms + 7);
    CHECK(e.finish_ms == e.start_ms + 16);
    CHECK(e.start_ms >= e.arrive_ms);
    CHECK(e.start_ms >= prev_finish);  // non-preemptive, one core
    CHECK(e.deadline_ms == e.offload_ms + 45);
    CHECK(e.missed == (e.finish_ms > e.deadline_ms));
    if (e.missed) ++misses;
    rmax = std::max(rmax, e.finish_ms - e.offload_ms);
    prev_finish = e.finish_ms;
  }
  CHECK(misses == out.deadline_misses);
  CHECK(rmax == out.max_response_ms);
}

TEST_CASE("property: zero misses implies rmax <= deadline; rmax >= t + E") {
  Mix mix{2024};
  for (int i = 0; i < 4000; ++i) {
    SchedParams p;
    p.cores = mix.in(1, 3);
    p.transfer_ms = mix.in(0, 25);
    p.exec_ms = mix.in(1, 20);
    p.vehicles = mix.in(1, 6);
    p.deadline_ms = mix.in(1, 220);
    p.working_ms = mix.in(p.exec_ms, 600);
    const SchedOutcome out = sched(p);
    if (out.jobs_completed == 0) {
      CHECK(out.max_response_ms == 0);
      CHECK(out.deadline_misses == 0);
      continue;
    }
    CHECK(out.deadline_misses <= out.jobs_completed);
    CHECK(out.max_response_ms >= p.transfer_ms + p.exec_ms);
    if (out.deadline_misses == 0) CHECK(out.max_response_ms <= p.deadline_ms);
  }
}

TEST_CASE("property: more cores never hurt; less transfer never hurts") {
  Mix mix{77};
  for (int i = 0; i < 600; ++i) {
    SchedParams p;
    p.cores = mix.in(1, 4);
    p.transfer_ms = mix.in(1, 20);
    p.exec_ms = mix.in(1, 15);
    p.vehicles = mix.in(1, 8);
    p.deadline_ms = mix.in(5, 150);
    // Long enough that the first offload wave always completes. When the
    // working period cuts that wave short, lowering the transfer time can
    // let one more queued job finish and raise the observed maximum
    // response, so the monotonicity below only holds for complete waves.
    const std::int64_t wave = p.transfer_ms + ((p.vehicles + p.cores - 1) / p.cores + 1) * p.exec_ms;
    p.working_ms = wave + mix.in(50, 500);
    const SchedOutcome base = sched(p);

    SchedParams more_cores = p;
    more_cores.cores = p.cores + mix.in(1, 3);
    const SchedOutcome mc = sched(more_cores);
    CHECK(mc.max_response_ms <= base.max_response_ms);
    CHECK(mc.deadline_misses <= base.deadline_misses);

    SchedParams less_transfer = p;
    less_transfer.transfer_ms = p.transfer_ms - mix.in(1, p.transfer_ms);
    const SchedOutcome lt = sched(less_transfer);
    CHECK(lt.max_response_ms <= base.max_response_ms);
  }
}

TEST_CASE("property: more cores never hurt, even under truncated waves") {
  Mix mix{78};
  for (int i = 0; i < 600; ++i) {
    SchedParams p;
    p.cores = mix.in(1, 4);
    p.transfer_ms = mix.in(0, 20);
    p.exec_ms = mix.in(1, 15);
    p.vehicles = mix.in(1, 8);
    p.deadline_ms = mix.in(5, 150);
    p.working_ms = mix.in(p.exec_ms, 400);
    const SchedOutcome base = sched(p);
    SchedParams more_cores = p;
    more_cores.cores = p.cores + mix.in(1, 3);
    const SchedOutcome mc = sched(more_cores);
    CHECK(mc.max_response_ms <= base.max_response_ms);
    CHECK(mc.deadline_misses <= base.deadline_misses);
  }
}

TEST_CASE("property: deterministic") {
  Mix mix{11};
  for (int i = 0; i < 100; ++i) {
    SchedParams p;
    p.cores = mix.in(1, 2);
    p.transfer_ms = mix.in(0, 20);
    p.exec_ms = mix.in(1, 20);
    p.vehicles = mix.in(1, 5);
    p.deadline_ms = mix.in(1, 200);
    p.working_ms = mix.in(p.exec_ms, 500);
    const SchedOutcome a = sched(p);
    const SchedOutcome b = sched(p);
    CHECK(a.deadline_misses == b.deadline_misses);
    CHECK(a.max_response_ms == b.max_response_ms);
    CHECK(a.jobs_completed == b.jobs_completed);
  }
}

TEST_CASE("oracle equivalence on a randomized sample") {
  Mix mix{90210};
  for (int i = 0; i < 1500; ++i) {
    SchedParams p;
    p.cores = mix.in(1, 2);
    p.transfer_ms = mix.in(0, 20);
    p.exec_ms = mix.in(1, 20);
    p.vehicles = mix.in(1, 4);
    p.deadline_ms = mix.in(1, 200);
    p.working_ms = mix.in(p.exec_ms, 500);
    const SchedOutcome got = sched(p);
    const SchedOutcome ref = sched_oracle(p);
    REQUIRE(got.deadline_misses == ref.deadline_misses);
    REQUIRE(got.max_response_ms == ref.max_response_ms);
    REQUIRE(got.jobs_completed == ref.jobs_completed);
  }
}
