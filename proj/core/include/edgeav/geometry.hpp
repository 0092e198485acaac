#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgeav {

// One square cell of the analysis grid, identified by its south-west corner.
struct Area {
  std::string id;
  double x_min = 0.0;  // meters east of the map origin
  double y_min = 0.0;  // meters north of the map origin
};

// Anchor that maps the grid centroid onto a latitude/longitude, enabling
// ingestion of lat/lon traces.
struct GeoOrigin {
  double lat = 0.0;
  double lon = 0.0;
};

// A set of pairwise-disjoint, axis-aligned square areas with a common side
// length. Cells are half-open: [x_min, x_min + side) x [y_min, y_min + side).
class AreaGrid {
 public:
  AreaGrid(std::vector<Area> areas, double side_m);

  // JSON: {"side_m": 2000, "areas": [{"area_id", "x_min", "y_min"}, ...],
  //        "origin": {"lat", "lon"}}  (origin optional, needed for lat/lon input)
  static AreaGrid parse_json(std::istream& in);
  static AreaGrid load_json(const std::string& path);

  double side_m() const { return side_m_; }
  const std::vector<Area>& areas() const { return areas_; }
  const std::optional<GeoOrigin>& origin() const { return origin_; }
  void set_origin(GeoOrigin o) { origin_ = o; }

  // Area containing (x, y), or nullptr when the point lies outside the grid.
  const Area* locate(double x, double y) const;

  const Area* find(const std::string& id) const;

  // Mean of the cell centers; the reference point of the lat/lon projection.
  std::pair<double, double> centroid() const;

  // Equirectangular projection about the grid centroid. Requires an origin.
  std::pair<double, double> project(double lat, double lon) const;

 private:
  std::vector<Area> areas_;
  double side_m_;
  std::optional<GeoOrigin> origin_;
};

}  // namespace edgeav
