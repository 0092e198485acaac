#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgeav {

// Error taxonomy used across the toolkit. The CLI maps these onto exit codes:
//   io_error -> 2, format_error -> 3, budget_error -> 4.
// API misuse (invalid parameter combinations) throws std::invalid_argument.

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The file opened fine but its content is not what the tool expects
// (bad header, mostly-unparseable rows, wrong schema).
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No finite channel capacity can satisfy the deadline: L/S <= eta*E.
// Carries the bounds that would restore feasibility.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& msg, double max_speed_mps, double min_blind_m)
      : std::runtime_error(msg), max_speed_mps(max_speed_mps), min_blind_m(min_blind_m) {}

  double max_speed_mps;  // fastest S that keeps the instance feasible at this L
  double min_blind_m;    // shortest L that keeps the instance feasible at this S
};

// The configuration search exceeded its iteration cap.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& msg, std::uint64_t calls) : std::runtime_error(msg), calls(calls) {}

  std::uint64_t calls;
};

}  // namespace edgeav
