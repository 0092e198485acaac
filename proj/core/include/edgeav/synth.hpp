#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "edgeav/geometry.hpp"
#include "edgeav/trace.hpp"

namespace edgeav {

// Target demand for one (area, hour) cell of the synthetic generator.
struct CellTarget {
  double vehicles = 0.0;   // target mean unique-vehicle count per window
  double speed_mps = 0.0;  // target mean speed
};

// JSON: {"seed": 42, "areas": {"A5": {"16": {"vehicles": 1800, "speed_mps": 6.26}, ...}}}
struct SynthProfile {
  std::uint64_t seed = 0;
  std::map<std::string, std::map<int, CellTarget>> areas;

  static SynthProfile parse_json(std::istream& in);
  static SynthProfile load_json(const std::string& path);
};

// Generates a trace whose aggregation reproduces the profile targets:
// vehicle counts land on the nearest representable window mean (multiples of
// 0.2, hence within +/-5% for any target >= 2 and exact for targets on that
// grid) and speeds stay within +/-2% of the target. Every record lies inside
// its cell. Byte-deterministic for a fixed seed: records come out sorted by
// (timestamp, vehicle id) and each cell draws from its own seeded stream.
//
// Throws std::invalid_argument for a target with vehicles > 0 and
// speed <= 0, negative vehicle counts, or an area missing from the grid.
std::vector<TraceRecord> synthesize_trace(const SynthProfile& profile, const AreaGrid& grid);

}  // namespace edgeav
