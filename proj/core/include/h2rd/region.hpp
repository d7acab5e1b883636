#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2rd/time_series.hpp"

namespace h2rd {

/// Station to relief-region lookup. Stations outside every region are simply
/// absent.
class RegionMapping {
 public:
  RegionMapping() = default;
  explicit RegionMapping(
      const std::vector<std::pair<std::string, std::string>>& entries);

  /// Throws std::invalid_argument if the station already maps elsewhere.
  void add(const std::string& station, const std::string& region);
  std::optional<std::string> region_of(const std::string& station) const;
  std::vector<std::string> regions() const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::map<std::string, std::string> table_;
};

/// Pointwise sum of all station series mapped to `region`. Stations that are
/// unmapped or mapped to another region are ignored. All station series must
/// share resolution and extent.
TimeSeries aggregate_region(const std::map<std::string, TimeSeries>& stations,
                            const RegionMapping& mapping,
                            const std::string& region);

}  // namespace h2rd
