#include "edgeav/units.hpp"

#include <cmath>

namespace edgeav {

namespace {
constexpr double kGuardMs = 1e-6;  // one nanosecond, in ms
}

std::int64_t to_ms_ceil(double seconds) {
  return static_cast<std::int64_t>(std::ceil(seconds * 1000.0 - kGuardMs));
}

std::int64_t to_ms_floor(double seconds) {
  return static_cast<std::int64_t>(std::floor(seconds * 1000.0 + kGuardMs));
}

}  // namespace edgeav
