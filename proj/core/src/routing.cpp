#include "edgeav/routing.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "edgeav/csv.hpp"
#include "edgeav/errors.hpp"

namespace edgeav {

double Route::total_m() const {
  double sum = 0;
  for (const auto& s : segments) sum += s.distance_m;
  return sum;
}

Scenario Scenario::parse_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("scenario file: invalid JSON: ") + e.what());
  }
  Scenario s;
  try {
    s.name = j.at("name").get<std::string>();
    s.hour = j.at("hour").get<int>();
    s.source = j.value("source", "");
    s.destination = j.value("destination", "");
    for (const auto& route : j.at("routes")) {
      Route r;
      r.name = route.at("name").get<std::string>();
      for (const auto& seg : route.at("segments")) {
        r.segments.push_back(
            {seg.at("area_id").get<std::string>(), seg.at("distance_m").get<double>()});
      }
      s.routes.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("scenario file: missing or mistyped field: ") + e.what());
  }
  if (s.hour < 0 || s.hour > 23) throw format_error("scenario file: hour out of range");
  if (s.routes.size() < 2) throw format_error("scenario file: need at least two routes");
  for (const auto& r : s.routes) {
    if (r.segments.empty()) throw format_error("scenario file: route " + r.name + " has no segments");
    for (const auto& seg : r.segments) {
      if (seg.distance_m <= 0) {
        throw format_error("scenario file: non-positive segment distance in route " + r.name);
      }
    }
  }
  return s;
}

Scenario Scenario::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open scenario file: " + path);
  return parse_json(in);
}

double travel_time(const Route& route, int hour, const SpeedLookup& speeds) {
  double total = 0;
  for (const auto& seg : route.segments) {
    const auto speed = speeds(seg.area_id, hour);
    if (!speed || *speed <= 0) {
      throw std::invalid_argument("travel_time: no speed for area " + seg.area_id + " at hour " +
                                  std::to_string(hour));
    }
    total += seg.distance_m / *speed;
  }
  return total;
}

TravelReport compare_routes(const Scenario& scenario, const SpeedLookup& regular,
                            const AvSpeedLookup& av, const std::vector<double>& blind_list) {
  TravelReport report;
  report.scenario = scenario.name;
  report.hour = scenario.hour;

  for (const auto& route : scenario.routes) {
    RouteTimes times;
    times.route = route.name;
    times.total_m = route.total_m();
    times.regular_s = travel_time(route, scenario.hour, regular);
    for (double blind : blind_list) {
      times.av_s[blind] = travel_time(
          route, scenario.hour,
          [&](const std::string& area, int hour) { return av(area, hour, blind); });
    }
    report.routes.push_back(std::move(times));
  }

  // Fastest route per model; ties go to the first declared route.
  const auto* best_regular = &report.routes.front();
  for (const auto& rt : report.routes) {
    if (rt.regular_s < best_regular->regular_s) best_regular = &rt;
  }
  report.fastest_regular = best_regular->route;

  for (double blind : blind_list) {
    const auto* best = &report.routes.front();
    for (const auto& rt : report.routes) {
      if (rt.av_s.at(blind) < best->av_s.at(blind)) best = &rt;
    }
    report.fastest_av[blind] = best->route;
    const bool inverted = best->route != report.fastest_regular;
    report.inversion[blind] = inverted;
    if (inverted) report.any_inversion = true;
  }
  return report;
}

void write_travel_report_csv(std::ostream& out, const TravelReport& report) {
  out << "scenario,hour,route,model,blind_m,travel_s\n";
  for (const auto& rt : report.routes) {
    out << report.scenario << ',' << report.hour << ',' << rt.route << ",regular,,"
        << fmt_fixed(rt.regular_s, 3) << '\n';
    for (const auto& [blind, seconds] : rt.av_s) {
      out << report.scenario << ',' << report.hour << ',' << rt.route << ",av,"
          << fmt_double(blind) << ',' << fmt_fixed(seconds, 3) << '\n';
    }
  }
}

void write_travel_summary_json(std::ostream& out, const std::vector<TravelReport>& reports) {
  nlohmann::ordered_json j;
  j["note"] = "departure-hour speeds are applied to the whole trip";
  j["scenarios"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["name"] = r.scenario;
    s["hour"] = r.hour;
    s["fastest_regular"] = r.fastest_regular;
    nlohmann::ordered_json fa = nlohmann::ordered_json::object();
    nlohmann::ordered_json inv = nlohmann::ordered_json::object();
    for (const auto& [blind, route] : r.fastest_av) fa[fmt_double(blind)] = route;
    for (const auto& [blind, flag] : r.inversion) inv[fmt_double(blind)] = flag;
    s["fastest_av"] = fa;
    s["inversion"] = inv;
    s["any_inversion"] = r.any_inversion;
    nlohmann::ordered_json routes = nlohmann::ordered_json::array();
    for (const auto& rt : r.routes) {
      nlohmann::ordered_json item;
      item["route"] = rt.route;
      item["distance_m"] = rt.total_m;
      item["regular_s"] = rt.regular_s;
      nlohmann::ordered_json av = nlohmann::ordered_json::object();
      for (const auto& [blind, seconds] : rt.av_s) av[fmt_double(blind)] = seconds;
      item["av_s"] = av;
      routes.push_back(item);
    }
    s["routes"] = routes;
    j["scenarios"].push_back(s);
  }
  out << j.dump(2) << '\n';
}

}  // namespace edgeav
