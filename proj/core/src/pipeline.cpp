#include "h2rd/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "h2rd/error.hpp"

namespace h2rd {

namespace {

TimeSeries to_quarter(const TimeSeries& s) {
  return s.resolution() == Resolution::Quarter ? s : resample_to_quarter(s);
}

/// Values of `s` on [0, horizon); `s` must start at 0 and cover the horizon.
TimeSeries head(const TimeSeries& s, std::int64_t horizon) {
  auto v = s.values().subspan(0, static_cast<std::size_t>(horizon));
  return TimeSeries(s.resolution(), std::vector<double>(v.begin(), v.end()), 0);
}

}  // namespace

ReconstructionResult reconstruct(const ReconstructionInputs& in) {
  ReconstructionResult out;

  std::map<std::string, TimeSeries> quarter;
  std::int64_t shortest = std::numeric_limits<std::int64_t>::max();
  for (const auto& [station, s] : in.feedin) {
    auto q = to_quarter(s);
    if (q.start_index() != 0)
      throw DataError(station, 0, "feed-in series must start at step 0");
    shortest = std::min(shortest, q.end_index());
    quarter.emplace(station, std::move(q));
  }

  std::int64_t horizon = 0;
  if (in.horizon_quarter) {
    horizon = *in.horizon_quarter;
    if (horizon < 4 || horizon % 4 != 0)
      throw DataError("horizon", 0, "horizon must be a positive multiple of 4 quarter steps");
    if (!quarter.empty() && horizon > shortest)
      throw DataError("horizon", 0, "horizon exceeds the feed-in extent");
  } else {
    if (quarter.empty()) throw DataError("feed-in", 0, "no feed-in series and no horizon");
    horizon = shortest / 4 * 4;
    if (horizon < 4) throw DataError("feed-in", 0, "feed-in shorter than one hour");
  }
  out.horizon_quarter = horizon;
  for (auto& [station, q] : quarter) q = head(q, horizon);

  std::map<std::string, std::vector<TimeSeries>> clipped;
  std::map<std::string, StationReport> reports;
  for (const auto& [station, q] : quarter) reports[station].station = station;

  for (const auto& m0 : in.measures) {
    const auto it = quarter.find(m0.station_id);
    if (it == quarter.end())
      throw DataError(m0.station_id, 0, "measure for station without feed-in series");
    auto m = m0;
    m.window.begin = std::max<std::int64_t>(m.window.begin, 0);
    m.window.end = std::min(m.window.end, horizon);
    if (m.window.empty()) {
      out.warnings.push_back("measure of " + m.station_id + " at [" +
                             std::to_string(m0.window.begin) + ", " +
                             std::to_string(m0.window.end) + ") lies outside the horizon");
      continue;
    }
    if (!(m.window == m0.window)) {
      out.warnings.push_back("measure of " + m.station_id + " clamped to the horizon");
      if (m.coverage.size() > 1) {
        const auto off = static_cast<std::size_t>(m.window.begin - m0.window.begin);
        m.coverage = std::vector<double>(
            m0.coverage.begin() + static_cast<std::ptrdiff_t>(off),
            m0.coverage.begin() + static_cast<std::ptrdiff_t>(off + m.window.length()));
      }
    }
    auto& rep = reports[m.station_id];
    ++rep.measures;
    if (m.kind == MeasureKind::Transmission) {
      auto clip = clip_transmission(it->second, m);
      if (m.target_energy_kwh) {
        rep.declared_kwh = rep.declared_kwh.value_or(0.0) + *m.target_energy_kwh;
        rep.targeted_kwh += clip.series.energy();
      }
      rep.shortfall = rep.shortfall || clip.shortfall;
      clipped[m.station_id].push_back(std::move(clip.series));
    } else {
      clipped[m.station_id].push_back(clip_distribution(it->second, m));
    }
  }

  for (auto& [station, rep] : reports) {
    const auto& parts = clipped[station];
    auto hourly = resample_to_hour(accumulate_measures(parts, horizon));
    rep.region = in.mapping.region_of(station);
    rep.stats = series_stats(hourly);
    rep.reconstructed_kwh = rep.stats.energy_kwh;
    if (!rep.region) out.warnings.push_back("station " + station + " is not mapped to a region");
    out.stations.emplace(station, std::move(hourly));
    out.reports.push_back(rep);
  }
  for (const auto& region : in.mapping.regions()) {
    bool any = false;
    for (const auto& [station, s] : out.stations) any = any || in.mapping.region_of(station) == region;
    if (!any) {
      out.warnings.push_back("region " + region + " has no stations with feed-in");
      continue;
    }
    out.regions.emplace(region, aggregate_region(out.stations, in.mapping, region));
  }
  return out;
}

}  // namespace h2rd
