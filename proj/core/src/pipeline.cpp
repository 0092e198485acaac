#include "edgeav/pipeline.hpp"

#include <atomic>
#include <thread>

#include "edgeav/errors.hpp"

namespace edgeav {

std::vector<HourlyConfigRow> run_configure_sweep(const std::vector<HourlyDemand>& demand,
                                                 const SweepSettings& settings) {
  struct Cell {
    const HourlyDemand* row;
    double blind_m;
  };
  std::vector<Cell> cells;
  for (const auto& row : demand) {
    if (row.avg_vehicles <= 0) continue;
    for (double blind : settings.blind_m) cells.push_back({&row, blind});
  }

  std::vector<HourlyConfigRow> rows(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const auto& cell = cells[i];
      HourlyConfigRow out;
      out.area_id = cell.row->area_id;
      out.hour = cell.row->hour;
      out.blind_m = cell.blind_m;

      SearchParams params = settings.search;
      params.blind_m = cell.blind_m;
      params.vehicles = cell.row->avg_vehicles;
      params.speed_mps = cell.row->avg_speed_mps.value_or(0.0);

      try {
        const SearchResult result = configuration_search(params);
        out.status = SearchStatus::ok;
        out.capacity_bps = result.config.capacity_bps;
        out.cores = result.config.cores;
        out.search_calls = result.sched_calls;
      } catch (const infeasible_error&) {
        out.status = SearchStatus::infeasible;
      } catch (const budget_error& e) {
        out.status = SearchStatus::budget_exceeded;
        out.search_calls = e.calls;
      } catch (const std::invalid_argument&) {
        // Demand rows with zero/absent speed cannot be scheduled against.
        out.status = SearchStatus::infeasible;
      }
      rows[i] = std::move(out);
    }
  };

  unsigned n = settings.parallelism;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, cells.empty() ? 1 : static_cast<unsigned>(cells.size()));

  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::vector<DeployedConfig> derive_deployed_configs(const HourlyConfigTable& table) {
  std::vector<DeployedConfig> out;
  for (const auto& area : table.area_ids()) {
    for (double blind : table.blind_values()) {
      if (!table.hours(area, blind)) continue;
      out.push_back(peak_config(table, area, blind));
      out.push_back(average_config(table, area, blind));
    }
  }
  return out;
}

}  // namespace edgeav
