#include "edgeav/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "edgeav/csv.hpp"
#include "edgeav/errors.hpp"

namespace edgeav {

namespace {

constexpr int kWindowsPerHour = 5;
constexpr std::int64_t kWindowSeconds = 180;

// Small deterministic generator; avoids std::uniform_* so output bytes do not
// depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive bounds
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

std::uint64_t cell_seed(std::uint64_t seed, const std::string& area, int hour) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (char c : area) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h ^= static_cast<std::uint64_t>(hour);
  h *= 1099511628211ULL;
  return h;
}

}  // namespace

SynthProfile SynthProfile::parse_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("profile file: invalid JSON: ") + e.what());
  }
  SynthProfile p;
  try {
    p.seed = j.value("seed", 0ULL);
    for (const auto& [area, hours] : j.at("areas").items()) {
      for (const auto& [hour_str, cell] : hours.items()) {
        std::int64_t hour = -1;
        if (!parse_i64(hour_str, hour) || hour < 0 || hour > 23) {
          throw format_error("profile file: bad hour key '" + hour_str + "'");
        }
        p.areas[area][static_cast<int>(hour)] = {cell.at("vehicles").get<double>(),
                                                 cell.at("speed_mps").get<double>()};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("profile file: missing or mistyped field: ") + e.what());
  }
  return p;
}

SynthProfile SynthProfile::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open profile file: " + path);
  return parse_json(in);
}

std::vector<TraceRecord> synthesize_trace(const SynthProfile& profile, const AreaGrid& grid) {
  std::vector<TraceRecord> records;

  for (const auto& [area_id, hours] : profile.areas) {
    const Area* area = grid.find(area_id);
    if (!area) throw std::invalid_argument("synthesize_trace: area " + area_id + " not in grid");

    for (const auto& [hour, target] : hours) {
      if (target.vehicles < 0) {
        throw std::invalid_argument("synthesize_trace: negative vehicle target for " + area_id);
      }
      if (target.vehicles == 0) continue;
      if (target.speed_mps <= 0) {
        throw std::invalid_argument("synthesize_trace: vehicles > 0 with speed <= 0 for " + area_id +
                                    " hour " + std::to_string(hour));
      }

      Rng rng(cell_seed(profile.seed, area_id, hour));

      // Nearest representable window mean: spread round(5*V) vehicle-window
      // appearances as evenly as possible over the five windows. Each
      // appearance is a fresh vehicle confined to its window, so unique
      // counts per window are exact.
      const std::int64_t appearances = std::llround(kWindowsPerHour * target.vehicles);
      const std::int64_t base = appearances / kWindowsPerHour;
      const std::int64_t extra = appearances % kWindowsPerHour;

      int serial = 0;
      for (int w = 0; w < kWindowsPerHour; ++w) {
        const std::int64_t count = base + (w < extra ? 1 : 0);
        const std::int64_t window_start = static_cast<std::int64_t>(hour) * 3600 + w * kWindowSeconds;
        for (std::int64_t v = 0; v < count; ++v) {
          const std::int64_t dwell = rng.uniform_int(3, 6);  // samples: dwell + 1
          const std::int64_t offset = rng.uniform_int(0, kWindowSeconds - dwell - 1);

          // Straight pass through the cell interior; the inset keeps every
          // sample inside the cell for any profile speed up to ~60 m/s.
          const double inset = std::min(target.speed_mps * static_cast<double>(dwell) + 10.0,
                                        grid.side_m() / 2 - 1.0);
          const double x0 = area->x_min + rng.uniform(inset, grid.side_m() - inset);
          const double y0 = area->y_min + rng.uniform(inset, grid.side_m() - inset);
          const double heading = rng.uniform(0.0, 6.283185307179586);
          const double dx = std::cos(heading);
          const double dy = std::sin(heading);

          char id[64];
          std::snprintf(id, sizeof(id), "%s-h%02d-w%d-%04d", area_id.c_str(), hour, w, serial++);

          const double lo_x = area->x_min + 0.5, hi_x = area->x_min + grid.side_m() - 0.5;
          const double lo_y = area->y_min + 0.5, hi_y = area->y_min + grid.side_m() - 0.5;
          double pos = 0.0;
          for (std::int64_t s = 0; s <= dwell; ++s) {
            const double speed = target.speed_mps * rng.uniform(0.98, 1.02);
            TraceRecord rec;
            rec.timestamp = window_start + offset + s;
            rec.vehicle_id = id;
            rec.x = std::clamp(x0 + dx * pos, lo_x, hi_x);
            rec.y = std::clamp(y0 + dy * pos, lo_y, hi_y);
            rec.speed_mps = speed;
            records.push_back(std::move(rec));
            pos += speed;
          }
        }
      }
    }
  }

  std::sort(records.begin(), records.end(), [](const TraceRecord& a, const TraceRecord& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.vehicle_id < b.vehicle_id;
  });
  return records;
}

}  // namespace edgeav
