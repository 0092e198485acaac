#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeav/geometry.hpp"
#include "edgeav/trace.hpp"

namespace edgeav {

// Average demand observed in one area during one hour of the day.
struct HourlyDemand {
  std::string area_id;
  int hour = 0;                             // 0..23
  double avg_vehicles = 0.0;                // mean unique-vehicle count over the sampled windows
  std::optional<double> avg_speed_mps;      // absent when no vehicle was observed
};

// Builds per-(area, hour) demand from tagged trace records.
//
// Each hour is sampled through five consecutive 3-minute windows covering
// its first 15 minutes. Per window and area, the unique vehicle ids and the
// mean of their speed samples are taken; the demand row averages the five
// window counts (empty windows count as zero) and the nonempty windows'
// speed means. Records outside the sampled minutes are ignored. Input order
// does not matter.
class DemandAccumulator {
 public:
  explicit DemandAccumulator(const AreaGrid& grid);

  // Area may be nullptr (record outside the grid); such records are ignored.
  void add(const TraceRecord& rec, const Area* area);

  // One row per (area, hour), sorted by area id then hour.
  std::vector<HourlyDemand> finish() const;

 private:
  struct WindowAgg {
    std::unordered_set<std::string> vehicles;
    double speed_sum = 0.0;
    std::uint64_t samples = 0;
  };

  const AreaGrid* grid_;
  // (area id, hour * 5 + window) -> aggregate
  std::map<std::pair<std::string, int>, WindowAgg> windows_;
};

// CSV: area_id,hour,avg_vehicles,avg_speed_mps (speed empty when absent)
void write_demand_csv(std::ostream& out, const std::vector<HourlyDemand>& rows);
std::vector<HourlyDemand> read_demand_csv(std::istream& in);
std::vector<HourlyDemand> load_demand_csv(const std::string& path);

}  // namespace edgeav
