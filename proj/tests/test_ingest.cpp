#include "doctest.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "edgeav/demand.hpp"
#include "edgeav/errors.hpp"
#include "edgeav/geometry.hpp"
#include "edgeav/synth.hpp"
#include "edgeav/trace.hpp"

using edgeav::Area;
using edgeav::AreaGrid;
using edgeav::CellTarget;
using edgeav::DemandAccumulator;
using edgeav::format_error;
using edgeav::HourlyDemand;
using edgeav::parse_trace;
using edgeav::ParseStats;
using edgeav::SynthProfile;
using edgeav::synthesize_trace;
using edgeav::TraceFormat;
using edgeav::TraceRecord;

namespace {

AreaGrid two_areas() {
  return AreaGrid({{"A1", 0, 0}, {"A2", 2000, 0}}, 2000);
}

const HourlyDemand& row_for(const std::vector<HourlyDemand>& rows, const std::string& area, int hour) {
  for (const auto& r : rows) {
    if (r.area_id == area && r.hour == hour) return r;
  }
  REQUIRE(false);
  static HourlyDemand dummy;
  return dummy;
}

std::vector<HourlyDemand> aggregate(const std::vector<std::pair<TraceRecord, const Area*>>& tagged,
                                    const AreaGrid& grid) {
  DemandAccumulator acc(grid);
  for (const auto& [rec, area] : tagged) acc.add(rec, area);
  return acc.finish();
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(AreaGrid({{"A1", 0, 0}, {"A2", 1000, 0}}, 2000), std::invalid_argument);
  CHECK_THROWS_AS(AreaGrid({{"A1", 0, 0}, {"A1", 2000, 0}}, 2000), std::invalid_argument);
  CHECK_THROWS_AS(AreaGrid({{"A1", 0, 0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(AreaGrid({}, 2000), std::invalid_argument);
  // Touching edges are fine: half-open boxes.
  CHECK_NOTHROW(AreaGrid({{"A1", 0, 0}, {"A2", 2000, 0}, {"A3", 0, 2000}}, 2000));
}

TEST_CASE("point location over cells") {
  const AreaGrid grid = two_areas();
  REQUIRE(grid.locate(2500, 500) != nullptr);
  CHECK(grid.locate(2500, 500)->id == "A2");
  CHECK(grid.locate(-10, 0) == nullptr);
  CHECK(grid.locate(0, 0)->id == "A1");
  CHECK(grid.locate(2000, 0)->id == "A2");  // boundary belongs to the right cell
  CHECK(grid.locate(4000, 0) == nullptr);
}

TEST_CASE("parse tags each record with its area") {
  const AreaGrid grid = two_areas();
  std::istringstream in(
      "timestamp,vehicle_id,x,y,speed\n"
      "0,v1,2500,500,10\n"
      "1,v1,-10,0,10\n"
      "2,v2,100,100,5\n");
  std::vector<std::string> tags;
  const ParseStats stats = parse_trace(in, grid, TraceFormat::xy, [&](const TraceRecord&, const Area* a) {
    tags.push_back(a ? a->id : "-");
  });
  CHECK(stats.data_lines == 3);
  CHECK(stats.malformed == 0);
  CHECK(stats.tagged == 2);
  CHECK(stats.untagged == 1);
  CHECK(tags == std::vector<std::string>{"A2", "-", "A1"});
}

TEST_CASE("nine-line trace across three areas tags exactly as enumerated") {
  const AreaGrid grid({{"A1", 0, 0}, {"A2", 2000, 0}, {"A3", 0, 2000}}, 2000);
  std::istringstream in(
      "timestamp,vehicle_id,x,y,speed\n"
      "10,a,10,10,3\n"        // A1
      "11,a,1999,0,3\n"       // A1
      "12,a,2000,0,3\n"       // A2 (boundary)
      "13,b,3999,1999,7\n"    // A2
      "14,b,4000,1999,7\n"    // outside (x too far)
      "15,c,0,2000,4\n"       // A3 (boundary)
      "16,c,1500,3999,4\n"    // A3
      "17,c,1500,4000,4\n"    // outside (y too far)
      "18,d,2500,2500,9\n");  // outside (no cell there)
  std::vector<std::string> tags;
  parse_trace(in, grid, TraceFormat::xy,
              [&](const TraceRecord&, const Area* a) { tags.push_back(a ? a->id : "-"); });
  CHECK(tags == std::vector<std::string>{"A1", "A1", "A2", "A2", "-", "A3", "A3", "-", "-"});
}

TEST_CASE("malformed lines are skipped and counted; majority-malformed is fatal") {
  const AreaGrid grid = two_areas();

  std::istringstream ok(
      "timestamp,vehicle_id,x,y,speed\n"
      "0,v1,100,100,10\n"
      "not,a,valid,line\n"
      "bad\n"
      "1,v2,100,100,10\n"
      "2,v3,100,100,10\n");
  std::size_t seen = 0;
  const ParseStats stats =
      parse_trace(ok, grid, TraceFormat::xy, [&](const TraceRecord&, const Area*) { ++seen; });
  CHECK(stats.malformed == 2);
  CHECK(seen == 3);

  std::istringstream mostly_bad(
      "timestamp,vehicle_id,x,y,speed\n"
      "0,v1,100,100,10\n"
      "x\n"
      "y\n"
      "z\n");
  CHECK_THROWS_AS(parse_trace(mostly_bad, grid, TraceFormat::xy, [](const TraceRecord&, const Area*) {}),
                  format_error);
}

TEST_CASE("out-of-range timestamps and negative speeds are malformed") {
  const AreaGrid grid = two_areas();
  std::istringstream in(
      "timestamp,vehicle_id,x,y,speed\n"
      "86400,v1,100,100,10\n"
      "-1,v2,100,100,10\n"
      "5,v3,100,100,-0.1\n"
      "5,,100,100,1\n"
      "7,v4,100,100,0\n"
      "8,v5,100,100,1\n"
      "9,v6,100,100,2\n"
      "10,v7,100,100,3\n"
      "11,v8,100,100,4\n");
  const ParseStats stats = parse_trace(in, grid, TraceFormat::xy, [](const TraceRecord&, const Area*) {});
  CHECK(stats.malformed == 4);
  CHECK(stats.data_lines == 9);
}

TEST_CASE("unreadable trace file is an io error") {
  const AreaGrid grid = two_areas();
  CHECK_THROWS_AS(edgeav::parse_trace_file("/nonexistent/trace.csv", grid, TraceFormat::xy,
                                           [](const TraceRecord&, const Area*) {}),
                  edgeav::io_error);
}

TEST_CASE("grid JSON defaults the side length to 2000 m") {
  std::istringstream in(R"({"areas": [{"area_id": "A1", "x_min": 0, "y_min": 0}]})");
  const AreaGrid grid = AreaGrid::parse_json(in);
  CHECK(grid.side_m() == 2000.0);
  CHECK(grid.locate(1999, 1999) != nullptr);
  CHECK(grid.locate(2000, 0) == nullptr);

  std::istringstream missing(R"({"side_m": 100})");
  CHECK_THROWS_AS(AreaGrid::parse_json(missing), format_error);
}

TEST_CASE("wrong header is a format error") {
  const AreaGrid grid = two_areas();
  std::istringstream in("time,vehicle,x,y,v\n0,v1,1,1,1\n");
  CHECK_THROWS_AS(parse_trace(in, grid, TraceFormat::xy, [](const TraceRecord&, const Area*) {}),
                  format_error);
  std::istringstream geo("timestamp,vehicle_id,x,y,speed\n");
  CHECK_THROWS_AS(parse_trace(geo, grid, TraceFormat::latlon, [](const TraceRecord&, const Area*) {}),
                  format_error);
}

TEST_CASE("lat/lon records project into the grid about its centroid") {
  AreaGrid grid = two_areas();
  grid.set_origin({50.95, 7.0});
  // The origin maps to the centroid (2000, 1000); a record at the origin
  // lands there, inside A2.
  std::istringstream in(
      "timestamp,vehicle_id,lat,lon,speed\n"
      "0,v1,50.95,7.0,10\n");
  std::vector<std::pair<double, double>> pts;
  parse_trace(in, grid, TraceFormat::latlon,
              [&](const TraceRecord& r, const Area* a) {
                REQUIRE(a != nullptr);
                CHECK(a->id == "A2");
                pts.emplace_back(r.x, r.y);
              });
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].first == doctest::Approx(2000.0));
  CHECK(pts[0].second == doctest::Approx(1000.0));
}

TEST_CASE("one steady vehicle across all five windows gives V=1, S=10") {
  const AreaGrid grid = two_areas();
  std::vector<std::pair<TraceRecord, const Area*>> tagged;
  const Area* a1 = grid.locate(100, 100);
  for (int s = 0; s < 900; s += 30) {
    tagged.push_back({{s, "v1", 100, 100, 10.0}, a1});
  }
  const auto rows = aggregate(tagged, grid);
  const auto& row = row_for(rows, "A1", 0);
  CHECK(row.avg_vehicles == doctest::Approx(1.0));
  REQUIRE(row.avg_speed_mps.has_value());
  CHECK(*row.avg_speed_mps == doctest::Approx(10.0));
}

TEST_CASE("vehicle present in two of five windows gives V = 0.4") {
  const AreaGrid grid = two_areas();
  const Area* a1 = grid.locate(100, 100);
  std::vector<std::pair<TraceRecord, const Area*>> tagged = {
      {{10, "v1", 100, 100, 8.0}, a1},   // window 0
      {{200, "v1", 100, 100, 8.0}, a1},  // window 1
  };
  const auto rows = aggregate(tagged, grid);
  const auto& row = row_for(rows, "A1", 0);
  CHECK(row.avg_vehicles == doctest::Approx(0.4));
  CHECK(*row.avg_speed_mps == doctest::Approx(8.0));
}

TEST_CASE("minutes 15..59 and records outside the grid are ignored") {
  const AreaGrid grid = two_areas();
  const Area* a1 = grid.locate(100, 100);
  std::vector<std::pair<TraceRecord, const Area*>> tagged = {
      {{900, "v1", 100, 100, 8.0}, a1},   // minute 15: outside the sampled windows
      {{3599, "v2", 100, 100, 8.0}, a1},  // minute 59
      {{100, "v3", -5, -5, 8.0}, nullptr},
  };
  const auto rows = aggregate(tagged, grid);
  const auto& row = row_for(rows, "A1", 0);
  CHECK(row.avg_vehicles == 0.0);
  CHECK_FALSE(row.avg_speed_mps.has_value());
}

TEST_CASE("window speed means weight windows, not samples") {
  const AreaGrid grid = two_areas();
  const Area* a1 = grid.locate(100, 100);
  std::vector<std::pair<TraceRecord, const Area*>> tagged;
  // Window 0: two vehicles at 10 m/s (two samples each).
  for (int s : {0, 1}) {
    tagged.push_back({{s, "va", 100, 100, 10.0}, a1});
    tagged.push_back({{s, "vb", 100, 100, 10.0}, a1});
  }
  // Window 1: one vehicle, one sample at 20 m/s.
  tagged.push_back({{200, "vc", 100, 100, 20.0}, a1});
  const auto rows = aggregate(tagged, grid);
  const auto& row = row_for(rows, "A1", 0);
  CHECK(row.avg_vehicles == doctest::Approx((2 + 1) / 5.0));
  CHECK(*row.avg_speed_mps == doctest::Approx((10.0 + 20.0) / 2));  // mean of window means
}

TEST_CASE("property: duplicating every record leaves demand unchanged") {
  const AreaGrid grid = two_areas();
  const Area* a1 = grid.locate(100, 100);
  const Area* a2 = grid.locate(2100, 100);
  std::vector<std::pair<TraceRecord, const Area*>> tagged;
  std::uint64_t mix = 99;
  for (int i = 0; i < 500; ++i) {
    mix = mix * 6364136223846793005ULL + 1442695040888963407ULL;
    const int ts = static_cast<int>(mix % 900);
    const int veh = static_cast<int>((mix >> 32) % 17);
    const double speed = static_cast<double>((mix >> 40) % 130) / 10.0;
    tagged.push_back({{ts, "v" + std::to_string(veh), 100, 100, speed}, (veh % 2) ? a1 : a2});
  }
  auto doubled = tagged;
  doubled.insert(doubled.end(), tagged.begin(), tagged.end());

  const auto a = aggregate(tagged, grid);
  const auto b = aggregate(doubled, grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].avg_vehicles == b[i].avg_vehicles);
    CHECK(a[i].avg_speed_mps.has_value() == b[i].avg_speed_mps.has_value());
    if (a[i].avg_speed_mps) CHECK(*a[i].avg_speed_mps == doctest::Approx(*b[i].avg_speed_mps));
  }
}

TEST_CASE("property: order of records does not matter") {
  const AreaGrid grid = two_areas();
  const Area* a1 = grid.locate(100, 100);
  std::vector<std::pair<TraceRecord, const Area*>> tagged;
  for (int i = 0; i < 300; ++i) {
    tagged.push_back({{(i * 37) % 900, "v" + std::to_string(i % 11), 100, 100, 3.0 + i % 7}, a1});
  }
  auto shuffled = tagged;
  std::reverse(shuffled.begin(), shuffled.end());
  std::rotate(shuffled.begin(), shuffled.begin() + 123, shuffled.end());

  const auto a = aggregate(tagged, grid);
  const auto b = aggregate(shuffled, grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].avg_vehicles == b[i].avg_vehicles);
    if (a[i].avg_speed_mps) CHECK(*a[i].avg_speed_mps == doctest::Approx(*b[i].avg_speed_mps));
  }
}

TEST_CASE("synthesized single-vehicle cell round-trips exactly") {
  const AreaGrid grid = two_areas();
  SynthProfile profile;
  profile.seed = 1;
  profile.areas["A1"][9] = {1.0, 10.0};
  const auto records = synthesize_trace(profile, grid);
  REQUIRE(!records.empty());

  DemandAccumulator acc(grid);
  for (const auto& r : records) acc.add(r, grid.locate(r.x, r.y));
  const auto rows = acc.finish();
  const auto& row = row_for(rows, "A1", 9);
  CHECK(row.avg_vehicles == doctest::Approx(1.0));
  CHECK(*row.avg_speed_mps == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("synthesis is deterministic: same seed, same bytes") {
  const AreaGrid grid = two_areas();
  SynthProfile profile;
  profile.seed = 42;
  profile.areas["A1"][7] = {13.4, 9.0};
  profile.areas["A2"][7] = {4.0, 12.0};

  std::ostringstream a, b;
  for (const auto& r : synthesize_trace(profile, grid)) edgeav::write_trace_record(a, r);
  for (const auto& r : synthesize_trace(profile, grid)) edgeav::write_trace_record(b, r);
  CHECK(a.str() == b.str());
  CHECK(!a.str().empty());

  profile.seed = 43;
  std::ostringstream c;
  for (const auto& r : synthesize_trace(profile, grid)) edgeav::write_trace_record(c, r);
  CHECK(a.str() != c.str());
}

TEST_CASE("every synthesized record falls inside its declared cell") {
  const AreaGrid grid = two_areas();
  SynthProfile profile;
  profile.seed = 7;
  profile.areas["A1"][0] = {25.0, 13.0};
  profile.areas["A2"][23] = {8.2, 6.0};
  for (const auto& r : synthesize_trace(profile, grid)) {
    const Area* a = grid.locate(r.x, r.y);
    REQUIRE(a != nullptr);
    const bool a1_hour0 = a->id == "A1" && r.timestamp < 900;
    const bool a2_hour23 = a->id == "A2" && r.timestamp >= 23 * 3600 && r.timestamp < 23 * 3600 + 900;
    CHECK((a1_hour0 || a2_hour23));
  }
}

TEST_CASE("property: round-trip hits representable targets within 5 percent") {
  const AreaGrid grid = two_areas();
  std::uint64_t mix = 4242;
  for (int trial = 0; trial < 12; ++trial) {
    SynthProfile profile;
    profile.seed = 1000 + trial;
    std::map<std::pair<std::string, int>, CellTarget> want;
    for (int cell = 0; cell < 4; ++cell) {
      mix = mix * 6364136223846793005ULL + 1442695040888963407ULL;
      const std::string area = (mix >> 8) % 2 ? "A1" : "A2";
      const int hour = static_cast<int>((mix >> 16) % 24);
      // Targets on the representable grid: multiples of 0.2, at least 1.
      const double vehicles = 1.0 + 0.2 * static_cast<double>((mix >> 24) % 120);
      const double speed = 3.0 + static_cast<double>((mix >> 32) % 100) / 10.0;
      profile.areas[area][hour] = {vehicles, speed};
      want[{area, hour}] = {vehicles, speed};
    }

    DemandAccumulator acc(grid);
    for (const auto& r : synthesize_trace(profile, grid)) acc.add(r, grid.locate(r.x, r.y));
    const auto rows = acc.finish();
    for (const auto& [key, target] : want) {
      const auto& row = row_for(rows, key.first, key.second);
      CHECK(row.avg_vehicles == doctest::Approx(target.vehicles).epsilon(0.05));
      REQUIRE(row.avg_speed_mps.has_value());
      CHECK(*row.avg_speed_mps == doctest::Approx(target.speed_mps).epsilon(0.05));
    }
  }
}

TEST_CASE("profile validation") {
  const AreaGrid grid = two_areas();
  SynthProfile bad1;
  bad1.areas["A1"][0] = {5.0, 0.0};  // vehicles without speed
  CHECK_THROWS_AS(synthesize_trace(bad1, grid), std::invalid_argument);
  SynthProfile bad2;
  bad2.areas["A1"][0] = {-1.0, 5.0};
  CHECK_THROWS_AS(synthesize_trace(bad2, grid), std::invalid_argument);
  SynthProfile bad3;
  bad3.areas["A9"][0] = {1.0, 5.0};  // unknown area
  CHECK_THROWS_AS(synthesize_trace(bad3, grid), std::invalid_argument);
}

TEST_CASE("demand CSV round-trips") {
  std::vector<HourlyDemand> rows = {
      {"A1", 0, 0.0, std::nullopt},
      {"A1", 7, 13.4, 9.25},
      {"A2", 16, 1800.0, 6.25856},
  };
  std::ostringstream out;
  edgeav::write_demand_csv(out, rows);
  std::istringstream in(out.str());
  const auto back = edgeav::read_demand_csv(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].area_id == rows[i].area_id);
    CHECK(back[i].hour == rows[i].hour);
    CHECK(back[i].avg_vehicles == rows[i].avg_vehicles);
    CHECK(back[i].avg_speed_mps == rows[i].avg_speed_mps);
  }
}
