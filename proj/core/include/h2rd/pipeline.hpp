#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2rd/reconstruction.hpp"
#include "h2rd/region.hpp"
#include "h2rd/time_series.hpp"

namespace h2rd {

struct ReconstructionInputs {
  /// Feed-in per station, hourly or 15-min. Hourly series are interpolated.
  std::map<std::string, TimeSeries> feedin;
  std::vector<RedispatchMeasure> measures;
  RegionMapping mapping;
  /// Horizon in 15-min steps, a multiple of 4. Defaults to the shortest
  /// feed-in extent, rounded down to whole hours.
  std::optional<std::int64_t> horizon_quarter;
};

struct StationReport {
  std::string station;
  std::optional<std::string> region;
  std::size_t measures = 0;
  /// Sum of the declared transmission targets, if any measure declared one.
  std::optional<double> declared_kwh;
  /// Curtailed energy of the measures that declared a target.
  double targeted_kwh = 0.0;
  double reconstructed_kwh = 0.0;
  bool shortfall = false;
  SeriesStats stats;
};

struct ReconstructionResult {
  std::int64_t horizon_quarter = 0;
  std::map<std::string, TimeSeries> stations;  ///< hourly
  std::map<std::string, TimeSeries> regions;   ///< hourly
  std::vector<StationReport> reports;          ///< station order
  std::vector<std::string> warnings;
};

/// Clips every measure against its station's feed-in, sums per station and
/// region, and averages to hourly resolution. Windows reaching past the
/// horizon are clamped with a warning. Throws DataError for measures of
/// stations without feed-in.
ReconstructionResult reconstruct(const ReconstructionInputs& in);

}  // namespace h2rd
