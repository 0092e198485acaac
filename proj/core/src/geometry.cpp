#include "edgeav/geometry.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "edgeav/errors.hpp"

namespace edgeav {

namespace {
constexpr double kEarthRadiusM = 6371000.0;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}  // namespace

AreaGrid::AreaGrid(std::vector<Area> areas, double side_m) : areas_(std::move(areas)), side_m_(side_m) {
  if (side_m_ <= 0) throw std::invalid_argument("AreaGrid: side length must be > 0");
  if (areas_.empty()) throw std::invalid_argument("AreaGrid: at least one area required");
  std::set<std::string> ids;
  for (const auto& a : areas_) {
    if (a.id.empty()) throw std::invalid_argument("AreaGrid: empty area id");
    if (!ids.insert(a.id).second) throw std::invalid_argument("AreaGrid: duplicate area id " + a.id);
  }
  // Squares of equal side overlap iff both center offsets are < side.
  for (std::size_t i = 0; i < areas_.size(); ++i) {
    for (std::size_t j = i + 1; j < areas_.size(); ++j) {
      if (std::abs(areas_[i].x_min - areas_[j].x_min) < side_m_ &&
          std::abs(areas_[i].y_min - areas_[j].y_min) < side_m_) {
        throw std::invalid_argument("AreaGrid: areas " + areas_[i].id + " and " + areas_[j].id +
                                    " overlap");
      }
    }
  }
}

AreaGrid AreaGrid::parse_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("grid file: invalid JSON: ") + e.what());
  }
  try {
    const double side = j.value("side_m", 2000.0);
    std::vector<Area> areas;
    for (const auto& item : j.at("areas")) {
      areas.push_back({item.at("area_id").get<std::string>(), item.at("x_min").get<double>(),
                       item.at("y_min").get<double>()});
    }
    AreaGrid grid(std::move(areas), side);
    if (j.contains("origin")) {
      grid.set_origin({j["origin"].at("lat").get<double>(), j["origin"].at("lon").get<double>()});
    }
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("grid file: missing or mistyped field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw format_error(std::string("grid file: ") + e.what());
  }
}

AreaGrid AreaGrid::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open grid file: " + path);
  return parse_json(in);
}

const Area* AreaGrid::locate(double x, double y) const {
  for (const auto& a : areas_) {
    if (x >= a.x_min && x < a.x_min + side_m_ && y >= a.y_min && y < a.y_min + side_m_) return &a;
  }
  return nullptr;
}

const Area* AreaGrid::find(const std::string& id) const {
  for (const auto& a : areas_) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::pair<double, double> AreaGrid::centroid() const {
  double sx = 0, sy = 0;
  for (const auto& a : areas_) {
    sx += a.x_min + side_m_ / 2;
    sy += a.y_min + side_m_ / 2;
  }
  return {sx / static_cast<double>(areas_.size()), sy / static_cast<double>(areas_.size())};
}

std::pair<double, double> AreaGrid::project(double lat, double lon) const {
  if (!origin_) throw std::invalid_argument("AreaGrid: lat/lon input requires an origin in the grid file");
  const auto [cx, cy] = centroid();
  const double x = cx + kEarthRadiusM * std::cos(origin_->lat * kDegToRad) * (lon - origin_->lon) * kDegToRad;
  const double y = cy + kEarthRadiusM * (lat - origin_->lat) * kDegToRad;
  return {x, y};
}

}  // namespace edgeav
