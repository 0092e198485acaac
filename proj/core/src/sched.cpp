#include "edgeav/sched.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace edgeav {

namespace {

void validate(const SchedParams& p) {
  if (p.cores < 1) throw std::invalid_argument("sched: cores must be >= 1");
  if (p.vehicles < 1) throw std::invalid_argument("sched: vehicles must be >= 1");
  if (p.exec_ms < 1) throw std::invalid_argument("sched: exec_ms must be >= 1");
  if (p.deadline_ms < 1) throw std::invalid_argument("sched: deadline_ms must be >= 1");
  if (p.transfer_ms < 0) throw std::invalid_argument("sched: transfer_ms must be >= 0");
  if (p.working_ms < p.exec_ms) throw std::invalid_argument("sched: working_ms must be >= exec_ms");
}

// All jobs share one relative deadline and one transfer time, so ordering by
// absolute deadline, by arrival, and by offload time is the same ordering.
// Completions happen at strictly increasing times and each completion
// re-enqueues that vehicle's next offload, so a FIFO queue keyed by
// (offload, vehicle) stays sorted and its front is always the EDF choice
// among arrived jobs (lowest index on the initial all-zero tie). Idle time is
// skipped in one jump to the next arrival, which changes nothing in between.
SchedOutcome run(const SchedParams& p, std::vector<JobEvent>* log) {
  validate(p);

  const std::int64_t per_core = (p.vehicles + p.cores - 1) / p.cores;

  std::deque<std::pair<std::int64_t, std::int64_t>> queue;  // (offload, vehicle)
  for (std::int64_t v = 0; v < per_core; ++v) queue.emplace_back(0, v);

  SchedOutcome out;
  std::int64_t now = 0;
  const std::int64_t last_start = p.working_ms - p.exec_ms;

  while (now < p.working_ms) {
    const auto [offload, vehicle] = queue.front();
    const std::int64_t arrive = offload + p.transfer_ms;
    if (arrive > now) {
      now = std::min(arrive, p.working_ms);
      continue;
    }
    const std::int64_t start = now;
    if (start > last_start) break;
    const std::int64_t finish = start + p.exec_ms;
    const std::int64_t deadline = offload + p.deadline_ms;
    const bool missed = finish > deadline;

    if (missed) ++out.deadline_misses;
    out.max_response_ms = std::max(out.max_response_ms, finish - offload);
    ++out.jobs_completed;
    if (log) log->push_back({vehicle, offload, arrive, start, finish, deadline, missed});

    now = finish;
    queue.pop_front();
    queue.emplace_back(finish, vehicle);
  }
  return out;
}

}  // namespace

SchedOutcome sched(const SchedParams& params) { return run(params, nullptr); }

SchedOutcome sched_trace(const SchedParams& params, std::vector<JobEvent>& log) {
  return run(params, &log);
}

}  // namespace edgeav
