#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "h2rd/econ.hpp"
#include "h2rd/plant.hpp"

namespace h2rd {

/// Energy prices in currency per kWh. Grid fees and taxes are taken as zero.
struct Prices {
  double rd = 0.0;
  double grid = 0.1976;
  double ppa_wind_off = 0.0883;
  double ppa_wind_on = 0.0729;
  double ppa_pv = 0.0555;

  void validate() const;
  bool operator==(const Prices&) const = default;
};

/// Complete technical and economic parameter set. Default-constructed values
/// are the reference assumptions in EUR(2024); data/params/defaults.yaml
/// carries the same numbers.
struct ParameterSet {
  Prices prices;
  PpaCostInputs wind_offshore_cost{3400.0, 39.0, 0.008, 25, 4454.0, 0.08};
  EconomicParams electrolyser{1292.81, 20.12, OpexBasis::Absolute, 0.0, 15, 0.09, {}};
  EconomicParams compressor{4558.69, 0.04, OpexBasis::FractionOfCapex, 0.0, 15, 0.09, {}};
  EconomicParams pressure_tank{730.57, 0.02, OpexBasis::FractionOfCapex, 0.0, 25, 0.09, {}};
  /// Rented bundle: capacity fee per kg and year, usage fee per kg injected.
  EconomicParams salt_cavern{12.75, 0.0, OpexBasis::Absolute, 0.36, 1, 0.0, 1.0};
  PlantSpec plant;

  void validate() const;
  /// Storage economics for an option; the free option costs nothing.
  EconomicParams storage(StorageOption option) const;
};

/// Reads a YAML parameter file. Keys missing from the file keep their default
/// values; unknown keys are rejected. Throws DataError.
ParameterSet load_parameters(const std::filesystem::path& path);
ParameterSet parse_parameters(const std::string& yaml_text, const std::string& source);
/// Emits every key in the same schema load_parameters accepts.
std::string parameters_to_yaml(const ParameterSet& p);

}  // namespace h2rd
