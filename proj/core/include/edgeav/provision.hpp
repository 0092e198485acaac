#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "edgeav/demand.hpp"
#include "edgeav/search.hpp"

namespace edgeav {

enum class SearchStatus { ok, infeasible, budget_exceeded };

// One solved (or failed) search cell of the configure sweep.
struct HourlyConfigRow {
  std::string area_id;
  int hour = 0;
  double blind_m = 0.0;
  SearchStatus status = SearchStatus::ok;
  double capacity_bps = 0.0;
  std::int64_t cores = 0;
  std::uint64_t search_calls = 0;
};

// Required configuration per (area, hour) for each blind distance.
class HourlyConfigTable {
 public:
  void put(const std::string& area, int hour, double blind_m, const EdgeConfig& config);
  const std::map<int, EdgeConfig>* hours(const std::string& area, double blind_m) const;

  std::vector<std::string> area_ids() const;
  std::vector<double> blind_values() const;

 private:
  std::map<std::pair<std::string, double>, std::map<int, EdgeConfig>> cells_;
};

HourlyConfigTable table_from_rows(const std::vector<HourlyConfigRow>& rows);

enum class ConfigKind { peak, average };

// A configuration actually deployed in an area for a given blind distance.
struct DeployedConfig {
  std::string area_id;
  double blind_m = 0.0;
  ConfigKind kind = ConfigKind::peak;
  double capacity_bps = 0.0;
  std::int64_t cores = 0;
};

// Componentwise maximum over the hours present in the table.
// Throws std::invalid_argument when the (area, blind) cell is empty.
DeployedConfig peak_config(const HourlyConfigTable& table, const std::string& area, double blind_m);

// Mean capacity and ceil(mean cores) over the hours present in the table
// (hours without traffic never enter the table, so they are excluded).
DeployedConfig average_config(const HourlyConfigTable& table, const std::string& area, double blind_m);

// Scheduler parameters shared by every safe-speed evaluation.
struct SimDefaults {
  double data_bits = 1.8e6;
  double exec_s = 0.016;
  double working_s = 60.0;
};

struct SafeSpeedResult {
  double safe_mps = 0.0;
  std::int64_t rmax_ms = 0;
  std::int64_t misses = 0;
};

// Simulates one hour of demand under a deployed configuration and returns
// min(S, L / rmax): the speed still compatible with the blind distance given
// the observed worst response. Equals S exactly when there were no misses.
// Throws std::invalid_argument when demand.avg_vehicles > 0 but the deployed
// capacity is zero, when the speed is absent/zero, or cores < 1.
SafeSpeedResult safe_speed(const HourlyDemand& demand, const DeployedConfig& deployed,
                           double blind_m, const SimDefaults& sim);

enum class TrafficLevel { low, medium, high };

// 1-D k-means (k = 3, Lloyd iterations, deterministic quantile init) over
// per-hour vehicle counts; labels follow ascending centroids. Throws
// std::invalid_argument when fewer than three distinct values are present.
std::vector<TrafficLevel> cluster_hours(const std::vector<double>& counts);

const char* to_string(TrafficLevel level);
const char* to_string(ConfigKind kind);
const char* to_string(SearchStatus status);

// hourly_configs.csv: area_id,hour,blind_m,capacity_bps,cores,search_calls,status
void write_hourly_configs_csv(std::ostream& out, const std::vector<HourlyConfigRow>& rows);
std::vector<HourlyConfigRow> read_hourly_configs_csv(std::istream& in);

// deployed_configs.csv: area_id,blind_m,kind,capacity_bps,cores
void write_deployed_configs_csv(std::ostream& out, const std::vector<DeployedConfig>& rows);
std::vector<DeployedConfig> read_deployed_configs_csv(std::istream& in);
std::vector<DeployedConfig> load_deployed_configs_csv(const std::string& path);

// safe_speeds.csv: area_id,hour,blind_m,regular_mps,safe_mps,rmax_ms,misses
struct SafeSpeedRow {
  std::string area_id;
  int hour = 0;
  double blind_m = 0.0;
  double regular_mps = 0.0;
  double safe_mps = 0.0;
  std::int64_t rmax_ms = 0;
  std::int64_t misses = 0;
};
void write_safe_speeds_csv(std::ostream& out, const std::vector<SafeSpeedRow>& rows);
std::vector<SafeSpeedRow> read_safe_speeds_csv(std::istream& in);
std::vector<SafeSpeedRow> load_safe_speeds_csv(const std::string& path);

// hour_clusters.csv: area_id,hour,avg_vehicles,cluster
struct HourClusterRow {
  std::string area_id;
  int hour = 0;
  double avg_vehicles = 0.0;
  TrafficLevel level = TrafficLevel::low;
};
void write_hour_clusters_csv(std::ostream& out, const std::vector<HourClusterRow>& rows);

}  // namespace edgeav
