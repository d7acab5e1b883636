#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "h2rd/reconstruction.hpp"
#include "h2rd/region.hpp"
#include "h2rd/time_series.hpp"

namespace h2rd {

// Series files:
//   # resolution_min=60
//   step,value
//   0,12.5
//   1,13
// Steps are 0-based, contiguous and ascending; the first step is the series'
// start index. All readers raise DataError with the offending line number.

TimeSeries read_series_csv(std::istream& in, const std::string& source);
TimeSeries read_series_csv(const std::filesystem::path& path);
/// Values are written in shortest round-trip form so re-reading is exact.
void write_series_csv(std::ostream& out, const TimeSeries& s);
void write_series_csv(const std::filesystem::path& path, const TimeSeries& s);

// station_id,start_step,end_step,cap_power_kw,target_energy_kwh
std::vector<RedispatchMeasure> read_transmission_log(std::istream& in,
                                                     const std::string& source);
std::vector<RedispatchMeasure> read_transmission_log(const std::filesystem::path& path);

// station_id,start_step,end_step,cap_fraction,nominal_power_kw,coverage
// `coverage` is empty (full), a single fraction, or ';'-separated per step.
std::vector<RedispatchMeasure> read_distribution_log(std::istream& in,
                                                     const std::string& source);
std::vector<RedispatchMeasure> read_distribution_log(const std::filesystem::path& path);

// station_id,region_id
RegionMapping read_region_mapping(std::istream& in, const std::string& source);
RegionMapping read_region_mapping(const std::filesystem::path& path);

}  // namespace h2rd
