#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "h2rd/analysis.hpp"
#include "h2rd/params.hpp"
#include "h2rd/scenario.hpp"

namespace h2rd {

/// Input series of one region and weather year.
struct Dataset {
  std::string region;
  int year = 0;
  ScenarioInputs inputs;
};

/// Cartesian grid: datasets x scenarios x storages x demands x rd prices.
struct SweepGrid {
  std::vector<Dataset> datasets;
  std::vector<ScenarioKind> scenarios;
  std::vector<StorageOption> storages;
  std::vector<double> rd_prices_ct;
  std::vector<double> annual_demands_kg;
  int horizon_steps = 8760;
  std::optional<int> month_block_steps;
  /// Prices other than redispatch, which the grid overrides.
  Prices prices;

  std::size_t size() const;
};

/// Scenario a variant is compared against.
ScenarioKind base_kind(ScenarioKind variant);

struct SweepKey {
  std::string region;
  int year = 0;
  ScenarioKind scenario = ScenarioKind::PpaRef;
  StorageOption storage = StorageOption::SaltCavern;
  double rd_price_ct = 0.0;
  double annual_demand_kg = 0.0;
};

/// Canonical order: region, year, scenario, storage, demand, then rd price, so
/// each price line is contiguous and ascending.
bool canonical_less(const SweepKey& a, const SweepKey& b);

/// Undefined metrics (for example shares of zero consumption) are NaN.
struct SweepRecord {
  SweepKey key;
  /// "optimal", the variant's solve status, or "base_<status>" when the base failed.
  std::string status;
  double ohsc = 0.0;
  double ohsc_ref = 0.0;
  double reduction = 0.0;
  double p_nom_ely_kw = 0.0;
  double s_ppa = 0.0;
  double s_rd = 0.0;
  double rd_used_share = 0.0;
  double rd_flh = 0.0;
  Decomposition decomposition;
};

/// Solves every grid point with at most `jobs` worker threads. The result is in
/// canonical order and independent of `jobs`. Solve failures are recorded in
/// the record status.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid, const ParameterSet& params,
                                   const LpBackend& backend, unsigned jobs = 1,
                                   const SolveOptions& options = {});

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records);
/// One CSV per (region, storage) named plot_<region>_<storage>.csv, with
/// reductions clamped at zero. Returns the written paths in canonical order.
std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                   const std::vector<SweepRecord>& records);

// Sweep files (YAML):
//
//   datasets:
//     - region: T1
//       year: 2021
//       inputs: {cf_wind_off: off.csv, rd_available: rd_t1.csv}
//   scenarios: [RD_PPA, FM_RD]
//   storages: [salt_cavern, pressure_tank]
//   rd_prices_ct: [0, 2, 4, 6, 8, 10]
//   annual_demands_kg: [1.0e6, 2.0e6]
//   horizon_steps: 168          # default: length of the first dataset's inputs
//   month_block_steps: 730      # optional
//   prices: {grid: 0.1976}      # optional
//   parameters: defaults.yaml   # optional
struct SweepFile {
  SweepGrid grid;
  ParameterSet params;
  std::map<std::string, std::filesystem::path> sources;
};

/// Throws DataError with line numbers for malformed content.
SweepFile load_sweep_file(const std::filesystem::path& path);

}  // namespace h2rd
