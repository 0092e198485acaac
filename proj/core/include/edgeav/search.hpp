#pragma once

#include <cstdint>
#include <vector>

#include "edgeav/sched.hpp"

namespace edgeav {

// A (channel capacity, logical cores) resource pair.
struct EdgeConfig {
  double capacity_bps = 0.0;
  std::int64_t cores = 0;
};

// Inputs for one capacity/core search. SI units throughout (bits, seconds,
// m/s); conversion to the scheduler's integer milliseconds happens only at
// the sched boundary, rounding transfer times up and deadlines down.
struct SearchParams {
  double blind_m = 2.0;        // L, distance budget between offload and result
  double vehicles = 1.0;       // V, average vehicle count (may be fractional)
  double speed_mps = 10.0;     // S, average vehicle speed
  double data_bits = 1.8e6;    // D, per-job data size
  double exec_s = 0.016;       // E, worst-case execution time at the edge
  double working_s = 60.0;     // W, simulated working period
  double eta = 2.0;            // queuing-delay headroom factor (>= 1)
  double delta_b_bps = 2e6;    // capacity increment per outer step
  std::int64_t delta_c = 5;    // core increment per inner step
  double epsilon = 0.005;      // response-time variation threshold
  double miss_sentinel = 100;       // initial deadline-miss count
  double variation_sentinel = 100;  // initial response-time variation
  std::uint64_t max_sched_calls = 1'000'000;  // iteration cap (budget_error past it)
};

struct SearchResult {
  EdgeConfig config;
  std::uint64_t sched_calls = 0;    // scheduler invocations the search performed
  std::int64_t transfer_ms = 0;     // transfer time at the returned capacity
  std::int64_t max_response_ms = 0; // response time at the returned config
};

// Optional probe log, for diagnostics and lattice-minimality checks.
struct SearchTrace {
  struct Probe {
    double capacity_bps;
    std::int64_t cores;
    std::int64_t misses;
    std::int64_t max_response_ms;
  };
  std::vector<Probe> probes;
};

// d = L / S. Throws std::invalid_argument when S <= 0.
double relative_deadline(double blind_m, double speed_mps);

// b = D*V / (L/S - eta*E). Throws infeasible_error when L/S - eta*E <= 0,
// carrying the speed/blind-distance bounds that restore feasibility.
double initial_capacity(double data_bits, double vehicles, double blind_m, double speed_mps,
                        double eta, double exec_s);

// Grid search for the minimum (capacity, cores) with zero deadline misses.
//
// Outer loop: capacity starts at initial_capacity and grows by delta_b.
// Inner loop: cores start at 1 and grow by delta_c, simulating each step,
// until misses reach zero or the relative response-time change falls to
// epsilon or below (at which point more cores stop helping and capacity is
// grown instead). The returned configuration is re-simulated before
// returning and always yields zero misses.
//
// Throws infeasible_error (no finite capacity works) or budget_error (the
// iteration cap was exceeded). Pure function of its parameters.
SearchResult configuration_search(const SearchParams& params, SearchTrace* trace = nullptr);

}  // namespace edgeav
