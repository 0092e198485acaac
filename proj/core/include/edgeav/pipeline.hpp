#pragma once

#include <vector>

#include "edgeav/demand.hpp"
#include "edgeav/provision.hpp"
#include "edgeav/search.hpp"

namespace edgeav {

// Everything a configure sweep needs besides per-cell demand. The SearchParams
// fields blind_m/vehicles/speed_mps are filled per cell.
struct SweepSettings {
  SearchParams search;                                   // tunables; per-cell fields overwritten
  std::vector<double> blind_m = {2, 4, 6, 8, 10, 12, 16, 20};
  unsigned parallelism = 0;                              // 0 = hardware concurrency
};

// Runs configuration_search for every (area, hour, blind) cell with nonzero
// demand. Cells are independent pure searches, so they fan out across
// threads; rows come back in a fixed (area, hour, blind) order regardless of
// the parallelism degree. Infeasible or over-budget cells are marked in the
// row status rather than aborting the sweep.
std::vector<HourlyConfigRow> run_configure_sweep(const std::vector<HourlyDemand>& demand,
                                                 const SweepSettings& settings);

// Peak and average configurations for every (area, blind) cell in the table,
// ordered by area then blind distance then kind.
std::vector<DeployedConfig> derive_deployed_configs(const HourlyConfigTable& table);

}  // namespace edgeav
