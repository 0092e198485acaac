// Command-line front end: runs the full pipeline or individual stages and
// writes every report artifact as CSV/JSON under an output directory.
//
// Exit codes: 0 success, 1 usage, 2 input/IO error, 3 format error,
// 4 search budget exceeded.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgeav/csv.hpp"
#include "edgeav/demand.hpp"
#include "edgeav/errors.hpp"
#include "edgeav/geometry.hpp"
#include "edgeav/pipeline.hpp"
#include "edgeav/provision.hpp"
#include "edgeav/routing.hpp"
#include "edgeav/sched.hpp"
#include "edgeav/search.hpp"
#include "edgeav/synth.hpp"
#include "edgeav/trace.hpp"
#include "edgeav/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFormat = 3;
constexpr int kExitBudget = 4;

std::string fnv64_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw edgeav::io_error("cannot hash missing file: " + path.string());
  std::uint64_t h = 1469598103934665603ULL;
  char buf[1 << 14];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  char out[32];
  std::snprintf(out, sizeof(out), "fnv64:%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw edgeav::io_error("cannot write " + path.string());
  return out;
}

// Accumulates everything one command run needs to report, then writes
// <out-dir>/manifest.json. Records no clocks or machine state, so reruns
// with the same inputs produce byte-identical manifests.
class Manifest {
 public:
  Manifest(std::string command, fs::path out_dir)
      : command_(std::move(command)), out_dir_(std::move(out_dir)) {}

  void param(const std::string& key, const std::string& value) { params_[key] = value; }
  void param(const std::string& key, double value) { params_[key] = edgeav::fmt_double(value); }
  void param(const std::string& key, std::uint64_t value) { params_[key] = std::to_string(value); }
  void input(const std::string& key, const std::string& path) { inputs_[key].push_back(path); }
  void output(const std::string& name) { outputs_.insert(name); }
  void note(const std::string& text) { notes_.push_back(text); }

  void write() const {
    ordered_json j;
    j["tool"] = "edgeav";
    j["version"] = edgeav::kVersion;
    j["command"] = command_;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : params_) params[k] = v;
    j["parameters"] = params;
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : inputs_) {
      if (v.size() == 1) inputs[k] = v.front();
      else inputs[k] = v;
    }
    j["inputs"] = inputs;
    ordered_json outputs = ordered_json::object();
    for (const auto& name : outputs_) outputs[name] = fnv64_file(out_dir_ / name);
    j["outputs"] = outputs;
    j["notes"] = notes_;
    auto out = open_out(out_dir_ / "manifest.json");
    out << j.dump(2) << '\n';
  }

 private:
  std::string command_;
  fs::path out_dir_;
  std::map<std::string, std::string> params_;
  std::map<std::string, std::vector<std::string>> inputs_;
  std::set<std::string> outputs_;
  std::vector<std::string> notes_;
};

std::vector<double> parse_blind_list(const std::string& text) {
  std::vector<double> out;
  for (const auto field : edgeav::split_csv(text)) {
    double v = 0;
    if (!edgeav::parse_f64(field, v) || v <= 0) {
      throw CLI::ValidationError("--blind-m", "expects a comma-separated list of positive meters");
    }
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--blind-m", "empty list");
  return out;
}

// Shared search/simulation tunables, mirroring the experiment's parameter
// table; flags override the defaults one by one.
struct Tunables {
  std::string blind = "2,4,6,8,10,12,16,20";
  double data_bits = 1.8e6;
  double exec_ms = 16;
  double working_s = 60;
  double eta = 2;
  double epsilon = 0.005;
  double delta_b_bps = 2e6;
  std::int64_t delta_c = 5;
  double sentinel = 100;
  std::uint64_t max_sched_calls = 1'000'000;
  unsigned parallel = 0;

  void attach(CLI::App* cmd, bool with_search_knobs) {
    cmd->add_option("--blind-m", blind, "Blind distances in meters, comma separated");
    cmd->add_option("--data-bits", data_bits, "Per-job data size D in bits");
    cmd->add_option("--exec-ms", exec_ms, "Edge execution time E in milliseconds");
    cmd->add_option("--working-s", working_s, "Working period W in seconds");
    if (with_search_knobs) {
      cmd->add_option("--eta", eta, "Queuing-delay headroom factor");
      cmd->add_option("--epsilon", epsilon, "Response-time variation threshold");
      cmd->add_option("--delta-b-bps", delta_b_bps, "Capacity increment in bits/s");
      cmd->add_option("--delta-c", delta_c, "Core-count increment");
      cmd->add_option("--sentinel", sentinel, "Initial miss/variation sentinel");
      cmd->add_option("--max-sched-calls", max_sched_calls, "Per-search scheduler call cap");
      cmd->add_option("--parallel", parallel, "Worker threads (0 = hardware)");
    }
  }

  edgeav::SearchParams search_params() const {
    edgeav::SearchParams p;
    p.data_bits = data_bits;
    p.exec_s = exec_ms / 1000.0;
    p.working_s = working_s;
    p.eta = eta;
    p.epsilon = epsilon;
    p.delta_b_bps = delta_b_bps;
    p.delta_c = delta_c;
    p.miss_sentinel = sentinel;
    p.variation_sentinel = sentinel;
    p.max_sched_calls = max_sched_calls;
    return p;
  }

  edgeav::SimDefaults sim_defaults() const {
    return {data_bits, exec_ms / 1000.0, working_s};
  }

  void record(Manifest& m, bool with_search_knobs) const {
    m.param("blind_m", blind);
    m.param("data_bits", data_bits);
    m.param("exec_ms", exec_ms);
    m.param("working_s", working_s);
    if (with_search_knobs) {
      m.param("eta", eta);
      m.param("epsilon", epsilon);
      m.param("delta_b_bps", delta_b_bps);
      m.param("delta_c", std::to_string(delta_c));
      m.param("sentinel", sentinel);
      m.param("max_sched_calls", max_sched_calls);
    }
  }
};

// ---- stage implementations ----------------------------------------------
// Each stage reads only files, writes only files: `all` chains them through
// the same functions, so staged reruns regenerate identical artifacts.

// Returns the seed actually used, for the manifest.
std::uint64_t stage_generate(const std::string& profile_path, const std::string& grid_path,
                             std::optional<std::uint64_t> seed_override, const fs::path& out_dir) {
  const edgeav::AreaGrid grid = edgeav::AreaGrid::load_json(grid_path);
  edgeav::SynthProfile profile = edgeav::SynthProfile::load_json(profile_path);
  if (seed_override) profile.seed = *seed_override;
  const auto records = edgeav::synthesize_trace(profile, grid);
  auto out = open_out(out_dir / "trace.csv");
  edgeav::write_trace_header(out);
  for (const auto& r : records) edgeav::write_trace_record(out, r);
  std::cerr << "generate: " << records.size() << " records -> " << (out_dir / "trace.csv").string()
            << "\n";
  return profile.seed;
}

void stage_ingest(const std::string& trace_path, const std::string& grid_path, bool geo,
                  const fs::path& out_dir) {
  const edgeav::AreaGrid grid = edgeav::AreaGrid::load_json(grid_path);
  edgeav::DemandAccumulator acc(grid);
  const auto stats = edgeav::parse_trace_file(
      trace_path, grid, geo ? edgeav::TraceFormat::latlon : edgeav::TraceFormat::xy,
      [&](const edgeav::TraceRecord& rec, const edgeav::Area* area) { acc.add(rec, area); });
  auto out = open_out(out_dir / "demand.csv");
  edgeav::write_demand_csv(out, acc.finish());
  std::cerr << "ingest: " << stats.data_lines << " lines (" << stats.malformed << " malformed, "
            << stats.untagged << " outside the grid) -> " << (out_dir / "demand.csv").string()
            << "\n";
}

// Returns the number of ok rows; fills budget_seen when some cell ran out.
std::size_t stage_configure(const std::string& demand_path, const Tunables& tun,
                            const fs::path& out_dir, bool* budget_seen) {
  const auto demand = edgeav::load_demand_csv(demand_path);
  edgeav::SweepSettings settings;
  settings.search = tun.search_params();
  settings.blind_m = parse_blind_list(tun.blind);
  settings.parallelism = tun.parallel;

  const auto rows = edgeav::run_configure_sweep(demand, settings);
  {
    auto out = open_out(out_dir / "hourly_configs.csv");
    edgeav::write_hourly_configs_csv(out, rows);
  }
  const auto table = edgeav::table_from_rows(rows);
  {
    auto out = open_out(out_dir / "deployed_configs.csv");
    edgeav::write_deployed_configs_csv(out, edgeav::derive_deployed_configs(table));
  }

  std::size_t ok = 0;
  for (const auto& r : rows) {
    if (r.status == edgeav::SearchStatus::ok) ++ok;
    if (budget_seen && r.status == edgeav::SearchStatus::budget_exceeded) *budget_seen = true;
  }
  std::cerr << "configure: " << ok << "/" << rows.size() << " cells solved -> "
            << (out_dir / "hourly_configs.csv").string() << "\n";
  return ok;
}

void stage_safespeed(const std::string& demand_path, const std::string& configs_path,
                     edgeav::ConfigKind kind, const Tunables& tun, const fs::path& out_dir) {
  const auto demand = edgeav::load_demand_csv(demand_path);
  const auto deployed = edgeav::load_deployed_configs_csv(configs_path);
  const edgeav::SimDefaults sim = tun.sim_defaults();

  std::map<std::pair<std::string, double>, edgeav::DeployedConfig> by_cell;
  for (const auto& d : deployed) {
    if (d.kind == kind) by_cell[{d.area_id, d.blind_m}] = d;
  }
  if (by_cell.empty()) {
    throw edgeav::io_error("no '" + std::string(edgeav::to_string(kind)) +
                           "' configurations found in " + configs_path);
  }

  std::vector<edgeav::SafeSpeedRow> rows;
  for (const auto& dem : demand) {
    if (dem.avg_vehicles <= 0) continue;
    for (const auto& [key, cfg] : by_cell) {
      if (key.first != dem.area_id) continue;
      try {
        const auto r = edgeav::safe_speed(dem, cfg, key.second, sim);
        rows.push_back({dem.area_id, dem.hour, key.second, dem.avg_speed_mps.value_or(0.0),
                        r.safe_mps, r.rmax_ms, r.misses});
      } catch (const std::invalid_argument& e) {
        std::cerr << "safespeed: skipping " << dem.area_id << "/" << dem.hour << " at L="
                  << key.second << ": " << e.what() << "\n";
      }
    }
  }
  {
    auto out = open_out(out_dir / "safe_speeds.csv");
    edgeav::write_safe_speeds_csv(out, rows);
  }

  // Traffic-level clustering of each area's 24 hourly counts.
  std::vector<edgeav::HourClusterRow> clusters;
  std::map<std::string, std::vector<const edgeav::HourlyDemand*>> by_area;
  for (const auto& dem : demand) by_area[dem.area_id].push_back(&dem);
  for (const auto& [area, cells] : by_area) {
    std::vector<double> counts;
    counts.reserve(cells.size());
    for (const auto* c : cells) counts.push_back(c->avg_vehicles);
    try {
      const auto levels = edgeav::cluster_hours(counts);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        clusters.push_back({area, cells[i]->hour, cells[i]->avg_vehicles, levels[i]});
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "safespeed: skipping clusters for area " << area << ": " << e.what() << "\n";
    }
  }
  {
    auto out = open_out(out_dir / "hour_clusters.csv");
    edgeav::write_hour_clusters_csv(out, clusters);
  }
  std::cerr << "safespeed: " << rows.size() << " rows -> " << (out_dir / "safe_speeds.csv").string()
            << "\n";
}

void stage_route(const std::vector<std::string>& scenario_paths, const std::string& demand_path,
                 const std::string& safespeed_path, const fs::path& out_dir,
                 Manifest* manifest) {
  const auto demand = edgeav::load_demand_csv(demand_path);
  const auto safe_rows = edgeav::load_safe_speeds_csv(safespeed_path);

  std::map<std::pair<std::string, int>, double> regular;
  for (const auto& d : demand) {
    if (d.avg_vehicles > 0 && d.avg_speed_mps) regular[{d.area_id, d.hour}] = *d.avg_speed_mps;
  }
  std::map<std::tuple<std::string, int, double>, double> safe;
  std::set<double> blinds;
  for (const auto& r : safe_rows) {
    safe[{r.area_id, r.hour, r.blind_m}] = r.safe_mps;
    blinds.insert(r.blind_m);
  }
  const std::vector<double> blind_list(blinds.begin(), blinds.end());

  const edgeav::SpeedLookup regular_lookup = [&](const std::string& area,
                                                 int hour) -> std::optional<double> {
    auto it = regular.find({area, hour});
    if (it == regular.end()) return std::nullopt;
    return it->second;
  };
  const edgeav::AvSpeedLookup av_lookup = [&](const std::string& area, int hour,
                                              double blind) -> std::optional<double> {
    auto it = safe.find({area, hour, blind});
    if (it == safe.end()) return std::nullopt;
    return it->second;
  };

  std::vector<edgeav::TravelReport> reports;
  for (const auto& path : scenario_paths) {
    const auto scenario = edgeav::Scenario::load_json(path);
    const auto report = edgeav::compare_routes(scenario, regular_lookup, av_lookup, blind_list);
    const std::string file = "route_" + scenario.name + ".csv";
    auto out = open_out(out_dir / file);
    edgeav::write_travel_report_csv(out, report);
    if (manifest) manifest->output(file);
    reports.push_back(report);
    std::cerr << "route: scenario " << scenario.name
              << (report.any_inversion ? " (inversion)" : "") << " -> "
              << (out_dir / file).string() << "\n";
  }
  auto out = open_out(out_dir / "route_summary.json");
  edgeav::write_travel_summary_json(out, reports);
}

// ---- command wiring -------------------------------------------------------

struct CommonArgs {
  std::string out_dir = "out";
};

fs::path prepare_out_dir(const CommonArgs& common) {
  fs::path dir(common.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw edgeav::io_error("cannot create output directory " + dir.string());
  return dir;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Edge capacity planning and travel-time analysis for assisted vehicles"};
  app.set_version_flag("--version", edgeav::kVersion);
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Synthesize a trace from a demand profile");
  std::string gen_profile, gen_grid;
  CommonArgs gen_common;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("--profile", gen_profile, "Synthetic demand profile JSON")->required();
  gen->add_option("--grid", gen_grid, "Area grid JSON")->required();
  gen->add_option("--seed", gen_seed, "Override the profile's seed");
  gen->add_option("--out-dir", gen_common.out_dir, "Output directory");

  // ingest
  auto* ing = app.add_subcommand("ingest", "Aggregate a trace into hourly demand");
  std::string ing_trace, ing_grid;
  bool ing_geo = false;
  CommonArgs ing_common;
  ing->add_option("--trace", ing_trace, "Trace CSV")->required();
  ing->add_option("--grid", ing_grid, "Area grid JSON")->required();
  ing->add_flag("--geo", ing_geo, "Trace uses lat/lon columns");
  ing->add_option("--out-dir", ing_common.out_dir, "Output directory");

  // configure
  auto* conf = app.add_subcommand("configure", "Search minimum edge configurations per cell");
  std::string conf_demand;
  Tunables conf_tun;
  CommonArgs conf_common;
  conf->add_option("--demand", conf_demand, "Demand CSV")->required();
  conf_tun.attach(conf, true);
  conf->add_option("--out-dir", conf_common.out_dir, "Output directory");

  // safespeed
  auto* safe = app.add_subcommand("safespeed", "Evaluate safe speeds under a deployed configuration");
  std::string safe_demand, safe_configs, safe_kind = "average";
  Tunables safe_tun;
  CommonArgs safe_common;
  safe->add_option("--demand", safe_demand, "Demand CSV")->required();
  safe->add_option("--configs", safe_configs, "Deployed configs CSV")->required();
  safe->add_option("--kind", safe_kind, "Which deployment to simulate: average|peak")
      ->check(CLI::IsMember({"average", "peak"}));
  safe_tun.attach(safe, false);
  safe->add_option("--out-dir", safe_common.out_dir, "Output directory");

  // route
  auto* route = app.add_subcommand("route", "Compare route travel times for both speed models");
  std::vector<std::string> route_scenarios;
  std::string route_demand, route_safespeeds;
  CommonArgs route_common;
  route->add_option("--scenario", route_scenarios, "Scenario JSON (repeatable)")->required();
  route->add_option("--demand", route_demand, "Demand CSV")->required();
  route->add_option("--safespeeds", route_safespeeds, "Safe speeds CSV")->required();
  route->add_option("--out-dir", route_common.out_dir, "Output directory");

  // all
  auto* all = app.add_subcommand("all", "Run the full pipeline");
  std::string all_profile, all_trace, all_grid;
  bool all_geo = false;
  std::vector<std::string> all_scenarios;
  std::optional<std::uint64_t> all_seed;
  Tunables all_tun;
  CommonArgs all_common;
  all->add_option("--profile", all_profile, "Synthetic demand profile JSON");
  all->add_option("--trace", all_trace, "Existing trace CSV (alternative to --profile)");
  all->add_option("--grid", all_grid, "Area grid JSON")->required();
  all->add_flag("--geo", all_geo, "Trace uses lat/lon columns");
  all->add_option("--scenario", all_scenarios, "Scenario JSON (repeatable)");
  all->add_option("--seed", all_seed, "Override the profile's seed");
  all_tun.attach(all, true);
  all->add_option("--out-dir", all_common.out_dir, "Output directory");

  // sched-debug
  auto* dbg = app.add_subcommand("sched-debug", "Dump the per-job event log of one scheduling run");
  edgeav::SchedParams dbg_params;
  CommonArgs dbg_common;
  dbg->add_option("--cores", dbg_params.cores, "Logical cores")->required();
  dbg->add_option("--transfer-ms", dbg_params.transfer_ms, "Transfer time (ms)")->required();
  dbg->add_option("--exec-ms", dbg_params.exec_ms, "Execution time (ms)")->required();
  dbg->add_option("--vehicles", dbg_params.vehicles, "Vehicle count")->required();
  dbg->add_option("--deadline-ms", dbg_params.deadline_ms, "Relative deadline (ms)")->required();
  dbg->add_option("--working-ms", dbg_params.working_ms, "Working period (ms)")->required();
  dbg->add_option("--out-dir", dbg_common.out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    const fs::path dir = prepare_out_dir(gen_common);
    const std::uint64_t seed = stage_generate(gen_profile, gen_grid, gen_seed, dir);
    Manifest m("generate", dir);
    m.input("profile", gen_profile);
    m.input("grid", gen_grid);
    m.param("seed", seed);
    m.output("trace.csv");
    m.write();
    return kExitOk;
  }

  if (ing->parsed()) {
    const fs::path dir = prepare_out_dir(ing_common);
    stage_ingest(ing_trace, ing_grid, ing_geo, dir);
    Manifest m("ingest", dir);
    m.input("trace", ing_trace);
    m.input("grid", ing_grid);
    m.param("geo", ing_geo ? "true" : "false");
    m.output("demand.csv");
    m.write();
    return kExitOk;
  }

  if (conf->parsed()) {
    const fs::path dir = prepare_out_dir(conf_common);
    bool budget_seen = false;
    const std::size_t ok = stage_configure(conf_demand, conf_tun, dir, &budget_seen);
    Manifest m("configure", dir);
    m.input("demand", conf_demand);
    conf_tun.record(m, true);
    m.note("average configurations aggregate only hours with nonzero vehicle demand");
    m.output("hourly_configs.csv");
    m.output("deployed_configs.csv");
    m.write();
    if (ok == 0) return budget_seen ? kExitBudget : kExitInput;
    return kExitOk;
  }

  if (safe->parsed()) {
    const fs::path dir = prepare_out_dir(safe_common);
    const auto kind = safe_kind == "peak" ? edgeav::ConfigKind::peak : edgeav::ConfigKind::average;
    stage_safespeed(safe_demand, safe_configs, kind, safe_tun, dir);
    Manifest m("safespeed", dir);
    m.input("demand", safe_demand);
    m.input("configs", safe_configs);
    m.param("kind", safe_kind);
    safe_tun.record(m, false);
    m.output("safe_speeds.csv");
    m.output("hour_clusters.csv");
    m.write();
    return kExitOk;
  }

  if (route->parsed()) {
    const fs::path dir = prepare_out_dir(route_common);
    Manifest m("route", dir);
    stage_route(route_scenarios, route_demand, route_safespeeds, dir, &m);
    m.input("demand", route_demand);
    m.input("safespeeds", route_safespeeds);
    for (const auto& s : route_scenarios) m.input("scenario", s);
    m.note("departure-hour speeds are applied to the whole trip");
    m.output("route_summary.json");
    m.write();
    return kExitOk;
  }

  if (all->parsed()) {
    if (all_profile.empty() == all_trace.empty()) {
      std::cerr << "all: exactly one of --profile or --trace is required\n";
      return kExitInput;
    }
    const fs::path dir = prepare_out_dir(all_common);
    Manifest m("all", dir);
    m.input("grid", all_grid);
    all_tun.record(m, true);
    m.note("average configurations aggregate only hours with nonzero vehicle demand");
    m.note("departure-hour speeds are applied to the whole trip");

    std::string trace_path = all_trace;
    if (!all_profile.empty()) {
      const std::uint64_t seed = stage_generate(all_profile, all_grid, all_seed, dir);
      trace_path = (dir / "trace.csv").string();
      m.input("profile", all_profile);
      m.param("seed", seed);
      m.output("trace.csv");
    } else {
      m.input("trace", all_trace);
      m.param("geo", all_geo ? "true" : "false");
    }

    stage_ingest(trace_path, all_grid, all_profile.empty() && all_geo, dir);
    m.output("demand.csv");

    const std::string demand_path = (dir / "demand.csv").string();
    bool budget_seen = false;
    const std::size_t ok = stage_configure(demand_path, all_tun, dir, &budget_seen);
    m.output("hourly_configs.csv");
    m.output("deployed_configs.csv");
    if (ok == 0) {
      m.write();
      return budget_seen ? kExitBudget : kExitInput;
    }

    stage_safespeed(demand_path, (dir / "deployed_configs.csv").string(),
                    edgeav::ConfigKind::average, all_tun, dir);
    m.param("kind", "average");
    m.output("safe_speeds.csv");
    m.output("hour_clusters.csv");

    if (!all_scenarios.empty()) {
      stage_route(all_scenarios, demand_path, (dir / "safe_speeds.csv").string(), dir, &m);
      for (const auto& s : all_scenarios) m.input("scenario", s);
      m.output("route_summary.json");
    }
    m.write();
    return kExitOk;
  }

  if (dbg->parsed()) {
    const fs::path dir = prepare_out_dir(dbg_common);
    std::vector<edgeav::JobEvent> log;
    const auto outcome = edgeav::sched_trace(dbg_params, log);
    auto out = open_out(dir / "sched_events.csv");
    out << "vehicle,offload_ms,arrive_ms,start_ms,finish_ms,deadline_ms,missed\n";
    for (const auto& e : log) {
      out << e.vehicle << ',' << e.offload_ms << ',' << e.arrive_ms << ',' << e.start_ms << ','
          << e.finish_ms << ',' << e.deadline_ms << ',' << (e.missed ? 1 : 0) << '\n';
    }
    std::cerr << "sched-debug: " << outcome.jobs_completed << " jobs, " << outcome.deadline_misses
              << " misses, rmax " << outcome.max_response_ms << " ms -> "
              << (dir / "sched_events.csv").string() << "\n";
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const edgeav::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const edgeav::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const edgeav::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const edgeav::infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
