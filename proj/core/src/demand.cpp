#include "edgeav/demand.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "edgeav/csv.hpp"
#include "edgeav/errors.hpp"

namespace edgeav {

namespace {
constexpr int kWindowsPerHour = 5;
constexpr std::int64_t kWindowSeconds = 180;
}  // namespace

DemandAccumulator::DemandAccumulator(const AreaGrid& grid) : grid_(&grid) {}

void DemandAccumulator::add(const TraceRecord& rec, const Area* area) {
  if (!area) return;
  const std::int64_t second_of_hour = rec.timestamp % 3600;
  if (second_of_hour >= kWindowsPerHour * kWindowSeconds) return;
  const int hour = static_cast<int>(rec.timestamp / 3600);
  const int window = static_cast<int>(second_of_hour / kWindowSeconds);
  auto& agg = windows_[{area->id, hour * kWindowsPerHour + window}];
  agg.vehicles.insert(rec.vehicle_id);
  agg.speed_sum += rec.speed_mps;
  ++agg.samples;
}

std::vector<HourlyDemand> DemandAccumulator::finish() const {
  std::vector<HourlyDemand> rows;
  std::vector<std::string> ids;
  ids.reserve(grid_->areas().size());
  for (const auto& a : grid_->areas()) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());

  for (const auto& id : ids) {
    for (int hour = 0; hour < 24; ++hour) {
      double count_sum = 0.0;
      double speed_mean_sum = 0.0;
      int nonempty = 0;
      for (int w = 0; w < kWindowsPerHour; ++w) {
        auto it = windows_.find({id, hour * kWindowsPerHour + w});
        if (it == windows_.end() || it->second.vehicles.empty()) continue;
        count_sum += static_cast<double>(it->second.vehicles.size());
        speed_mean_sum += it->second.speed_sum / static_cast<double>(it->second.samples);
        ++nonempty;
      }
      HourlyDemand row;
      row.area_id = id;
      row.hour = hour;
      row.avg_vehicles = count_sum / kWindowsPerHour;
      if (nonempty > 0) row.avg_speed_mps = speed_mean_sum / nonempty;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_demand_csv(std::ostream& out, const std::vector<HourlyDemand>& rows) {
  out << "area_id,hour,avg_vehicles,avg_speed_mps\n";
  for (const auto& r : rows) {
    out << r.area_id << ',' << r.hour << ',' << fmt_double(r.avg_vehicles) << ',';
    if (r.avg_speed_mps) out << fmt_double(*r.avg_speed_mps);
    out << '\n';
  }
}

std::vector<HourlyDemand> read_demand_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "area_id,hour,avg_vehicles,avg_speed_mps") {
    throw format_error("demand file: bad or missing header");
  }
  std::vector<HourlyDemand> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto fields = split_csv(t);
    HourlyDemand row;
    std::int64_t hour = 0;
    if (fields.size() != 4 || !parse_i64(fields[1], hour) || hour < 0 || hour > 23 ||
        !parse_f64(fields[2], row.avg_vehicles) || trim(fields[0]).empty()) {
      throw format_error("demand file: malformed line " + std::to_string(lineno));
    }
    row.area_id.assign(trim(fields[0]));
    row.hour = static_cast<int>(hour);
    if (!trim(fields[3]).empty()) {
      double s = 0;
      if (!parse_f64(fields[3], s)) throw format_error("demand file: malformed line " + std::to_string(lineno));
      row.avg_speed_mps = s;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<HourlyDemand> load_demand_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open demand file: " + path);
  return read_demand_csv(in);
}

}  // namespace edgeav
