#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "h2rd/params.hpp"
#include "h2rd/scenario.hpp"

namespace h2rd {

// Scenario files (YAML):
//
//   scenario:
//     kind: RD_PPA              # PPA_REF | RD_ONLY | RD_PPA | FM | FM_RD
//     horizon_steps: 168        # default: length of the input series, else 8760
//     month_block_steps: 730    # optional
//   storage: salt_cavern        # pressure_tank | salt_cavern | free
//   prices: {rd: 0.02, grid: 0.1976, ppa_wind_off: 0.0883, ppa_wind_on: 0.0729, ppa_pv: 0.0555}
//   demand:
//     annual_kg: 1.0e6
//   inputs:                     # hourly series CSV files, relative to this file
//     cf_wind_off: cf_off.csv
//     cf_wind_on: cf_on.csv
//     cf_pv: cf_pv.csv
//     rd_available: rd.csv
//   parameters: defaults.yaml   # optional parameter file, relative to this file
//
// Missing prices fall back to the parameter file's prices. Input series longer
// than the horizon are truncated to it.

struct ScenarioFile {
  ScenarioConfig config;
  ParameterSet params;
  /// Every file read, keyed by its role ("scenario", "parameters", "inputs.cf_pv", ...).
  std::map<std::string, std::filesystem::path> sources;
};

/// Throws DataError with line numbers for malformed content.
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// Reads the optional `inputs` mapping; shared with sweep files.
ScenarioInputs load_inputs(const std::map<std::string, std::filesystem::path>& files,
                           std::optional<int> horizon);

/// Horizon implied by the first present input, if any.
std::optional<int> inputs_length(const ScenarioInputs& in);

}  // namespace h2rd
