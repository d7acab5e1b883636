#include "h2rd/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace h2rd {
namespace {

void require_window_inside(const TimeSeries& feedin, StepWindow w) {
  if (feedin.resolution() != Resolution::Quarter)
    throw std::invalid_argument("feed-in must have 15-min resolution");
  if (w.begin < feedin.start_index() || w.end > feedin.end_index())
    throw std::invalid_argument(
        "measure window [" + std::to_string(w.begin) + ", " +
        std::to_string(w.end) + ") lies outside the feed-in series");
}

double window_peak(const TimeSeries& feedin, StepWindow w) {
  double peak = 0.0;
  for (auto t = w.begin; t < w.end; ++t)
    peak = std::max(peak, feedin[static_cast<std::size_t>(t - feedin.start_index())]);
  return peak;
}

}  // namespace

RedispatchMeasure RedispatchMeasure::transmission(std::string station,
                                                  StepWindow window,
                                                  double cap_power_kw,
                                                  std::optional<double> target_kwh) {
  RedispatchMeasure m;
  m.station_id = std::move(station);
  m.window = window;
  m.kind = MeasureKind::Transmission;
  m.cap_power_kw = cap_power_kw;
  m.target_energy_kwh = target_kwh;
  m.validate();
  return m;
}

RedispatchMeasure RedispatchMeasure::distribution(std::string station,
                                                  StepWindow window,
                                                  double cap_fraction,
                                                  double nominal_power_kw,
                                                  std::vector<double> coverage) {
  RedispatchMeasure m;
  m.station_id = std::move(station);
  m.window = window;
  m.kind = MeasureKind::Distribution;
  m.cap_fraction = cap_fraction;
  m.nominal_power_kw = nominal_power_kw;
  m.coverage = std::move(coverage);
  m.validate();
  return m;
}

void RedispatchMeasure::validate() const {
  if (window.empty()) throw std::invalid_argument("measure window is empty");
  if (window.begin < 0) throw std::invalid_argument("measure window starts before step 0");
  if (kind == MeasureKind::Transmission) {
    if (!(cap_power_kw >= 0.0) || !std::isfinite(cap_power_kw))
      throw std::invalid_argument("cap_power must be finite and >= 0");
    if (target_energy_kwh && !(*target_energy_kwh >= 0.0))
      throw std::invalid_argument("target energy must be >= 0");
    return;
  }
  if (!(cap_fraction >= 0.0 && cap_fraction <= 1.0))
    throw std::invalid_argument("cap_fraction must lie in [0, 1]");
  if (!(nominal_power_kw >= 0.0) || !std::isfinite(nominal_power_kw))
    throw std::invalid_argument("nominal power must be finite and >= 0");
  if (coverage.size() > 1 &&
      coverage.size() != static_cast<std::size_t>(window.length()))
    throw std::invalid_argument("coverage needs one entry or one per window step");
  for (double c : coverage)
    if (!(c > 0.0 && c <= 1.0))
      throw std::invalid_argument("coverage fractions must lie in (0, 1]");
}

double RedispatchMeasure::coverage_at(std::int64_t offset) const {
  if (coverage.empty()) return 1.0;
  if (coverage.size() == 1) return coverage.front();
  return coverage.at(static_cast<std::size_t>(offset));
}

TimeSeries resample_to_quarter(const TimeSeries& hourly) {
  if (hourly.resolution() != Resolution::Hour)
    throw std::invalid_argument("resample_to_quarter expects an hourly series");
  const auto n = hourly.size();
  std::vector<double> out;
  out.reserve(4 * n);
  for (std::size_t h = 0; h < n; ++h) {
    const double a = hourly[h];
    const double b = h + 1 < n ? hourly[h + 1] : a;
    for (int q = 0; q < 4; ++q) out.push_back(a + (b - a) * (q / 4.0));
  }
  return TimeSeries(Resolution::Quarter, std::move(out), hourly.start_index() * 4);
}

TimeSeries resample_to_hour(const TimeSeries& quarter) {
  if (quarter.resolution() != Resolution::Quarter)
    throw std::invalid_argument("resample_to_hour expects a 15-min series");
  if (quarter.size() % 4 != 0 || quarter.start_index() % 4 != 0)
    throw std::invalid_argument(
        "resample_to_hour needs whole hours (length and start divisible by 4)");
  std::vector<double> out(quarter.size() / 4);
  for (std::size_t h = 0; h < out.size(); ++h) {
    const auto q = 4 * h;
    out[h] = (quarter[q] + quarter[q + 1] + quarter[q + 2] + quarter[q + 3]) / 4.0;
  }
  return TimeSeries(Resolution::Hour, std::move(out), quarter.start_index() / 4);
}

double curtailed_energy(const TimeSeries& feedin, StepWindow w, double cap_kw) {
  require_window_inside(feedin, w);
  double sum = 0.0;
  for (auto t = w.begin; t < w.end; ++t)
    sum += std::max(0.0, feedin[static_cast<std::size_t>(t - feedin.start_index())] - cap_kw);
  return sum * feedin.step_hours();
}

TransmissionClip clip_transmission(const TimeSeries& feedin,
                                   const RedispatchMeasure& m) {
  if (m.kind != MeasureKind::Transmission)
    throw std::invalid_argument("clip_transmission needs a transmission measure");
  m.validate();
  require_window_inside(feedin, m.window);

  double cap = m.cap_power_kw;
  bool shortfall = false;
  int iterations = 0;

  if (m.target_energy_kwh) {
    const double target = *m.target_energy_kwh;
    const double at_cap = curtailed_energy(feedin, m.window, cap);
    const double tol = kTargetRelTolerance * target;
    if (target == 0.0) {
      if (at_cap > 0.0) cap = window_peak(feedin, m.window);
    } else if (std::abs(at_cap - target) > tol) {
      const double full = curtailed_energy(feedin, m.window, 0.0);
      if (full - target <= tol) {
        // Target at or beyond everything the feed-in can give.
        cap = 0.0;
        shortfall = target - full > tol;
      } else {
        // Curtailed energy falls monotonically in the cap.
        double lo = 0.0;
        double hi = window_peak(feedin, m.window);
        cap = 0.5 * (lo + hi);
        for (iterations = 1; iterations <= kMaxBisectionIterations; ++iterations) {
          cap = 0.5 * (lo + hi);
          const double e = curtailed_energy(feedin, m.window, cap);
          if (std::abs(e - target) <= tol) break;
          (e > target ? lo : hi) = cap;
        }
        iterations = std::min(iterations, kMaxBisectionIterations);
      }
    }
  }

  std::vector<double> out(feedin.size(), 0.0);
  for (auto t = m.window.begin; t < m.window.end; ++t) {
    const auto i = static_cast<std::size_t>(t - feedin.start_index());
    out[i] = std::max(0.0, feedin[i] - cap);
  }
  return {TimeSeries(Resolution::Quarter, std::move(out), feedin.start_index()),
          cap, shortfall, iterations};
}

TimeSeries clip_distribution(const TimeSeries& feedin, const RedispatchMeasure& m) {
  if (m.kind != MeasureKind::Distribution)
    throw std::invalid_argument("clip_distribution needs a distribution measure");
  m.validate();
  require_window_inside(feedin, m.window);
  const double cap = m.cap_fraction * m.nominal_power_kw;
  std::vector<double> out(feedin.size(), 0.0);
  for (auto t = m.window.begin; t < m.window.end; ++t) {
    const auto i = static_cast<std::size_t>(t - feedin.start_index());
    out[i] = m.coverage_at(t - m.window.begin) * std::max(0.0, feedin[i] - cap);
  }
  return TimeSeries(Resolution::Quarter, std::move(out), feedin.start_index());
}

TimeSeries accumulate_measures(std::span<const TimeSeries> clipped,
                               std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least one step");
  std::vector<double> acc(static_cast<std::size_t>(horizon), 0.0);
  for (const auto& s : clipped) {
    if (s.resolution() != Resolution::Quarter)
      throw std::invalid_argument("accumulate_measures expects 15-min series");
    if (s.start_index() < 0 || s.end_index() > horizon)
      throw std::invalid_argument("clipped series extends beyond the horizon");
    for (std::size_t i = 0; i < s.size(); ++i)
      acc[static_cast<std::size_t>(s.start_index()) + i] += s[i];
  }
  return TimeSeries(Resolution::Quarter, std::move(acc), 0);
}

SeriesStats series_stats(const TimeSeries& s) {
  if (s.resolution() != Resolution::Hour)
    throw std::invalid_argument("series_stats expects an hourly series");
  SeriesStats st;
  for (double v : s.values())
    if (v > 0.0) ++st.hours_with_measure;
  st.energy_kwh = s.energy();
  const double peak = s.peak();
  st.eq_full_load_hours = peak > 0.0 ? st.energy_kwh / peak : 0.0;
  return st;
}

}  // namespace h2rd
