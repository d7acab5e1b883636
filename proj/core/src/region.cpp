#include "h2rd/region.hpp"

#include <set>
#include <stdexcept>

namespace h2rd {

RegionMapping::RegionMapping(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [station, region] : entries) add(station, region);
}

void RegionMapping::add(const std::string& station, const std::string& region) {
  auto [it, inserted] = table_.emplace(station, region);
  if (!inserted && it->second != region)
    throw std::invalid_argument("station '" + station + "' maps to both '" +
                                it->second + "' and '" + region + "'");
}

std::optional<std::string> RegionMapping::region_of(const std::string& station) const {
  auto it = table_.find(station);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> RegionMapping::regions() const {
  std::set<std::string> unique;
  for (const auto& [station, region] : table_) unique.insert(region);
  return {unique.begin(), unique.end()};
}

TimeSeries aggregate_region(const std::map<std::string, TimeSeries>& stations,
                            const RegionMapping& mapping, const std::string& region) {
  if (stations.empty())
    throw std::invalid_argument("aggregate_region needs at least one station series");
  const TimeSeries& first = stations.begin()->second;
  std::vector<double> acc(first.size(), 0.0);
  // std::map iteration order is fixed, so the floating-point sum does not
  // depend on how the caller inserted the stations.
  for (const auto& [id, s] : stations) {
    if (s.resolution() != first.resolution() || s.start_index() != first.start_index() ||
        s.size() != first.size())
      throw std::invalid_argument("station '" + id +
                                  "' has a different resolution or horizon");
    if (mapping.region_of(id) != region) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s[i];
  }
  return TimeSeries(first.resolution(), std::move(acc), first.start_index());
}

}  // namespace h2rd
