#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edgeav {

struct RouteSegment {
  std::string area_id;
  double distance_m = 0.0;  // > 0
};

// An ordered sequence of per-area distances between a source and destination.
struct Route {
  std::string name;
  std::vector<RouteSegment> segments;

  double total_m() const;
};

// JSON: {"name", "hour", "routes": [{"name", "segments": [{"area_id",
// "distance_m"}, ...]}, ...]}, optionally "source"/"destination" labels.
struct Scenario {
  std::string name;
  int hour = 0;
  std::string source;       // optional label
  std::string destination;  // optional label
  std::vector<Route> routes;

  static Scenario parse_json(std::istream& in);
  static Scenario load_json(const std::string& path);
};

// Speed in m/s for (area, hour); empty when unknown.
using SpeedLookup = std::function<std::optional<double>(const std::string& area, int hour)>;
// Speed in m/s for (area, hour, blind_m); empty when unknown.
using AvSpeedLookup =
    std::function<std::optional<double>(const std::string& area, int hour, double blind_m)>;

// Sum of segment distance over speed. Departure-hour speeds apply to the
// whole trip. Throws std::invalid_argument naming the (area, hour) on a
// missing or non-positive speed.
double travel_time(const Route& route, int hour, const SpeedLookup& speeds);

struct RouteTimes {
  std::string route;
  double total_m = 0.0;
  double regular_s = 0.0;
  std::map<double, double> av_s;  // blind_m -> seconds
};

struct TravelReport {
  std::string scenario;
  int hour = 0;
  std::vector<RouteTimes> routes;
  std::string fastest_regular;
  std::map<double, std::string> fastest_av;  // blind_m -> route name
  std::map<double, bool> inversion;          // blind_m -> fastest differs
  bool any_inversion = false;
};

// Travel times per route under both speed models, the fastest route under
// each, and inversion flags where the AV-fastest route differs from the
// regular-fastest one.
TravelReport compare_routes(const Scenario& scenario, const SpeedLookup& regular,
                            const AvSpeedLookup& av, const std::vector<double>& blind_list);

// CSV: scenario,hour,route,model,blind_m,travel_s (blind_m empty on regular rows)
void write_travel_report_csv(std::ostream& out, const TravelReport& report);

// JSON summary over all scenarios, including inversion flags.
void write_travel_summary_json(std::ostream& out, const std::vector<TravelReport>& reports);

}  // namespace edgeav
