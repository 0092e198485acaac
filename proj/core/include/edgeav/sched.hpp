#pragma once

#include <cstdint>
#include <vector>

namespace edgeav {

// Parameters of one scheduling run. All times are whole milliseconds.
struct SchedParams {
  std::int64_t cores = 1;         // logical cores at the edge server (>= 1)
  std::int64_t transfer_ms = 0;   // per-job transfer time to the edge (>= 0)
  std::int64_t exec_ms = 1;       // worst-case job execution time (>= 1)
  std::int64_t vehicles = 1;      // vehicles served by the edge server (>= 1)
  std::int64_t deadline_ms = 1;   // relative deadline of every job (>= 1)
  std::int64_t working_ms = 1;    // simulated working period (>= exec_ms)
};

struct SchedOutcome {
  std::int64_t deadline_misses = 0;
  std::int64_t max_response_ms = 0;
  std::int64_t jobs_completed = 0;
};

// One completed (or selected) job in the debug event log.
struct JobEvent {
  std::int64_t vehicle = 0;  // 0-based index on the simulated core
  std::int64_t offload_ms = 0;
  std::int64_t arrive_ms = 0;
  std::int64_t start_ms = 0;
  std::int64_t finish_ms = 0;
  std::int64_t deadline_ms = 0;  // absolute
  bool missed = false;
};

// Simulates non-preemptive EDF on the most heavily loaded logical core.
//
// ceil(vehicles / cores) vehicles share one core. Every vehicle offloads its
// first job at time 0; a job offloaded at o arrives at o + transfer and has
// absolute deadline o + deadline. Among arrived unprocessed jobs, the one
// with the earliest absolute deadline runs non-preemptively for exec ms
// (ties broken by lowest vehicle index). A job finishing after its deadline
// counts as a miss; the vehicle's next offload happens at the finish time.
// Time advances by 1 ms when no job has arrived. A job whose start would
// exceed working - exec ends the run.
//
// Pure function: identical params give identical outcomes.
SchedOutcome sched(const SchedParams& params);

// Same simulation, also recording one event per completed job.
SchedOutcome sched_trace(const SchedParams& params, std::vector<JobEvent>& log);

}  // namespace edgeav
