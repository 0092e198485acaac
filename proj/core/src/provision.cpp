#include "edgeav/provision.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "edgeav/csv.hpp"
#include "edgeav/errors.hpp"
#include "edgeav/units.hpp"

namespace edgeav {

void HourlyConfigTable::put(const std::string& area, int hour, double blind_m,
                            const EdgeConfig& config) {
  cells_[{area, blind_m}][hour] = config;
}

const std::map<int, EdgeConfig>* HourlyConfigTable::hours(const std::string& area,
                                                          double blind_m) const {
  auto it = cells_.find({area, blind_m});
  return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::string> HourlyConfigTable::area_ids() const {
  std::set<std::string> ids;
  for (const auto& [key, _] : cells_) ids.insert(key.first);
  return {ids.begin(), ids.end()};
}

std::vector<double> HourlyConfigTable::blind_values() const {
  std::set<double> ls;
  for (const auto& [key, _] : cells_) ls.insert(key.second);
  return {ls.begin(), ls.end()};
}

HourlyConfigTable table_from_rows(const std::vector<HourlyConfigRow>& rows) {
  HourlyConfigTable table;
  for (const auto& r : rows) {
    if (r.status != SearchStatus::ok) continue;
    table.put(r.area_id, r.hour, r.blind_m, {r.capacity_bps, r.cores});
  }
  return table;
}

namespace {

const std::map<int, EdgeConfig>& cell_or_throw(const HourlyConfigTable& table,
                                               const std::string& area, double blind_m) {
  const auto* hours = table.hours(area, blind_m);
  if (!hours || hours->empty()) {
    throw std::invalid_argument("no hourly configurations for area " + area + " at blind distance " +
                                fmt_double(blind_m) + " m");
  }
  return *hours;
}

}  // namespace

DeployedConfig peak_config(const HourlyConfigTable& table, const std::string& area, double blind_m) {
  const auto& hours = cell_or_throw(table, area, blind_m);
  DeployedConfig out{area, blind_m, ConfigKind::peak, 0.0, 0};
  for (const auto& [_, cfg] : hours) {
    out.capacity_bps = std::max(out.capacity_bps, cfg.capacity_bps);
    out.cores = std::max(out.cores, cfg.cores);
  }
  return out;
}

DeployedConfig average_config(const HourlyConfigTable& table, const std::string& area,
                              double blind_m) {
  const auto& hours = cell_or_throw(table, area, blind_m);
  double cap_sum = 0.0;
  double core_sum = 0.0;
  for (const auto& [_, cfg] : hours) {
    cap_sum += cfg.capacity_bps;
    core_sum += static_cast<double>(cfg.cores);
  }
  const double n = static_cast<double>(hours.size());
  // Fractional cores are not deployable; rounding up also keeps the average
  // dominated by the peak.
  return {area, blind_m, ConfigKind::average, cap_sum / n,
          static_cast<std::int64_t>(std::ceil(core_sum / n - 1e-9))};
}

SafeSpeedResult safe_speed(const HourlyDemand& demand, const DeployedConfig& deployed,
                           double blind_m, const SimDefaults& sim) {
  if (demand.avg_vehicles <= 0) throw std::invalid_argument("safe_speed: no demand to simulate");
  if (!demand.avg_speed_mps || *demand.avg_speed_mps <= 0) {
    throw std::invalid_argument("safe_speed: demand row has no regular speed");
  }
  if (deployed.capacity_bps <= 0) {
    throw std::invalid_argument("safe_speed: deployed capacity is zero with nonzero demand");
  }
  if (deployed.cores < 1) throw std::invalid_argument("safe_speed: deployed cores must be >= 1");

  const double regular = *demand.avg_speed_mps;
  SchedParams params;
  params.cores = deployed.cores;
  params.transfer_ms = to_ms_ceil(sim.data_bits * demand.avg_vehicles / deployed.capacity_bps);
  params.exec_ms = to_ms_ceil(sim.exec_s);
  params.vehicles = static_cast<std::int64_t>(std::ceil(demand.avg_vehicles));
  params.deadline_ms = to_ms_floor(relative_deadline(blind_m, regular));
  params.working_ms = to_ms_floor(sim.working_s);

  const SchedOutcome outcome = sched(params);

  SafeSpeedResult result;
  result.rmax_ms = outcome.max_response_ms;
  result.misses = outcome.deadline_misses;
  if (outcome.max_response_ms == 0) {
    // No job finished inside the working period; nothing constrains the
    // speed beyond the regular traffic.
    result.safe_mps = regular;
  } else {
    const double limit = blind_m * 1000.0 / static_cast<double>(outcome.max_response_ms);
    result.safe_mps = limit >= regular ? regular : limit;
  }
  return result;
}

std::vector<TrafficLevel> cluster_hours(const std::vector<double>& counts) {
  std::vector<double> sorted(counts);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> unique(sorted);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() < 3) {
    throw std::invalid_argument("cluster_hours: need at least 3 distinct counts, got " +
                                std::to_string(unique.size()));
  }

  auto quantile = [](const std::vector<double>& v, double q) {
    const auto idx = std::min(v.size() - 1, static_cast<std::size_t>(q * static_cast<double>(v.size())));
    return v[idx];
  };
  std::array<double, 3> centroids = {quantile(sorted, 1.0 / 6), quantile(sorted, 3.0 / 6),
                                     quantile(sorted, 5.0 / 6)};
  if (!(centroids[0] < centroids[1] && centroids[1] < centroids[2])) {
    centroids = {quantile(unique, 1.0 / 6), quantile(unique, 3.0 / 6), quantile(unique, 5.0 / 6)};
  }

  std::vector<int> assign(counts.size(), 0);
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      int best = 0;
      double best_d = std::abs(counts[i] - centroids[0]);
      for (int k = 1; k < 3; ++k) {
        const double d = std::abs(counts[i] - centroids[k]);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;
    for (int k = 0; k < 3; ++k) {
      double sum = 0;
      std::size_t n = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (assign[i] == k) {
          sum += counts[i];
          ++n;
        }
      }
      if (n > 0) centroids[k] = sum / static_cast<double>(n);  // empty cluster keeps its centroid
    }
  }

  // Order labels by centroid so 0/1/2 mean low/medium/high.
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return centroids[a] < centroids[b]; });
  std::array<TrafficLevel, 3> label;
  label[order[0]] = TrafficLevel::low;
  label[order[1]] = TrafficLevel::medium;
  label[order[2]] = TrafficLevel::high;

  std::vector<TrafficLevel> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = label[assign[i]];
  return out;
}

const char* to_string(TrafficLevel level) {
  switch (level) {
    case TrafficLevel::low: return "low";
    case TrafficLevel::medium: return "medium";
    case TrafficLevel::high: return "high";
  }
  return "?";
}

const char* to_string(ConfigKind kind) {
  return kind == ConfigKind::peak ? "peak" : "average";
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::ok: return "ok";
    case SearchStatus::infeasible: return "infeasible";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

SearchStatus status_from_string(std::string_view s) {
  if (s == "ok") return SearchStatus::ok;
  if (s == "infeasible") return SearchStatus::infeasible;
  if (s == "budget_exceeded") return SearchStatus::budget_exceeded;
  throw format_error("unknown search status: " + std::string(s));
}

ConfigKind kind_from_string(std::string_view s) {
  if (s == "peak") return ConfigKind::peak;
  if (s == "average") return ConfigKind::average;
  throw format_error("unknown config kind: " + std::string(s));
}

void expect_header(std::istream& in, const char* header, const char* what) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != header) {
    throw format_error(std::string(what) + ": bad or missing header (expected '" + header + "')");
  }
}

}  // namespace

void write_hourly_configs_csv(std::ostream& out, const std::vector<HourlyConfigRow>& rows) {
  out << "area_id,hour,blind_m,capacity_bps,cores,search_calls,status\n";
  for (const auto& r : rows) {
    out << r.area_id << ',' << r.hour << ',' << fmt_double(r.blind_m) << ',';
    if (r.status == SearchStatus::ok) out << fmt_double(r.capacity_bps) << ',' << r.cores;
    else out << ',';
    out << ',' << r.search_calls << ',' << to_string(r.status) << '\n';
  }
}

std::vector<HourlyConfigRow> read_hourly_configs_csv(std::istream& in) {
  expect_header(in, "area_id,hour,blind_m,capacity_bps,cores,search_calls,status", "hourly configs file");
  std::vector<HourlyConfigRow> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    HourlyConfigRow r;
    std::int64_t hour = 0;
    if (f.size() != 7 || trim(f[0]).empty() || !parse_i64(f[1], hour) || !parse_f64(f[2], r.blind_m) ||
        !parse_u64(f[5], r.search_calls)) {
      throw format_error("hourly configs file: malformed line " + std::to_string(lineno));
    }
    r.area_id.assign(trim(f[0]));
    r.hour = static_cast<int>(hour);
    r.status = status_from_string(trim(f[6]));
    if (r.status == SearchStatus::ok &&
        (!parse_f64(f[3], r.capacity_bps) || !parse_i64(f[4], r.cores))) {
      throw format_error("hourly configs file: malformed line " + std::to_string(lineno));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_deployed_configs_csv(std::ostream& out, const std::vector<DeployedConfig>& rows) {
  out << "area_id,blind_m,kind,capacity_bps,cores\n";
  for (const auto& r : rows) {
    out << r.area_id << ',' << fmt_double(r.blind_m) << ',' << to_string(r.kind) << ','
        << fmt_double(r.capacity_bps) << ',' << r.cores << '\n';
  }
}

std::vector<DeployedConfig> read_deployed_configs_csv(std::istream& in) {
  expect_header(in, "area_id,blind_m,kind,capacity_bps,cores", "deployed configs file");
  std::vector<DeployedConfig> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    DeployedConfig r;
    if (f.size() != 5 || trim(f[0]).empty() || !parse_f64(f[1], r.blind_m) ||
        !parse_f64(f[3], r.capacity_bps) || !parse_i64(f[4], r.cores)) {
      throw format_error("deployed configs file: malformed line " + std::to_string(lineno));
    }
    r.area_id.assign(trim(f[0]));
    r.kind = kind_from_string(trim(f[2]));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<DeployedConfig> load_deployed_configs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open deployed configs file: " + path);
  return read_deployed_configs_csv(in);
}

void write_safe_speeds_csv(std::ostream& out, const std::vector<SafeSpeedRow>& rows) {
  out << "area_id,hour,blind_m,regular_mps,safe_mps,rmax_ms,misses\n";
  for (const auto& r : rows) {
    out << r.area_id << ',' << r.hour << ',' << fmt_double(r.blind_m) << ','
        << fmt_double(r.regular_mps) << ',' << fmt_double(r.safe_mps) << ',' << r.rmax_ms << ','
        << r.misses << '\n';
  }
}

std::vector<SafeSpeedRow> read_safe_speeds_csv(std::istream& in) {
  expect_header(in, "area_id,hour,blind_m,regular_mps,safe_mps,rmax_ms,misses", "safe speeds file");
  std::vector<SafeSpeedRow> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    SafeSpeedRow r;
    std::int64_t hour = 0;
    if (f.size() != 7 || trim(f[0]).empty() || !parse_i64(f[1], hour) || !parse_f64(f[2], r.blind_m) ||
        !parse_f64(f[3], r.regular_mps) || !parse_f64(f[4], r.safe_mps) ||
        !parse_i64(f[5], r.rmax_ms) || !parse_i64(f[6], r.misses)) {
      throw format_error("safe speeds file: malformed line " + std::to_string(lineno));
    }
    r.area_id.assign(trim(f[0]));
    r.hour = static_cast<int>(hour);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SafeSpeedRow> load_safe_speeds_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open safe speeds file: " + path);
  return read_safe_speeds_csv(in);
}

void write_hour_clusters_csv(std::ostream& out, const std::vector<HourClusterRow>& rows) {
  out << "area_id,hour,avg_vehicles,cluster\n";
  for (const auto& r : rows) {
    out << r.area_id << ',' << r.hour << ',' << fmt_double(r.avg_vehicles) << ','
        << to_string(r.level) << '\n';
  }
}

}  // namespace edgeav
