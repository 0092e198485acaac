#pragma once

#include <cstdint>

namespace edgeav {

// All internal speeds are m/s; mph appears only at I/O boundaries.
inline constexpr double kMpsPerMph = 0.44704;

inline double mph_to_mps(double mph) { return mph * kMpsPerMph; }
inline double mps_to_mph(double mps) { return mps / kMpsPerMph; }

// Conversions from real-valued seconds to the scheduler's integer milliseconds.
// Durations that make the system slower (transfer, execution) round up;
// deadlines round down. Both carry a 1 ns guard against representation noise
// so that exact millisecond values convert exactly.
std::int64_t to_ms_ceil(double seconds);
std::int64_t to_ms_floor(double seconds);

}  // namespace edgeav
