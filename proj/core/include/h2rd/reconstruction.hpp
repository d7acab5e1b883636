#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h2rd/time_series.hpp"

namespace h2rd {

/// Half-open step interval [begin, end) on the 15-min grid.
struct StepWindow {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t length() const noexcept { return end - begin; }
  bool empty() const noexcept { return end <= begin; }
  bool operator==(const StepWindow&) const = default;
};

enum class MeasureKind { Transmission, Distribution };

/// One logged downward redispatch measure.
///
/// Transmission measures cap feed-in at an absolute power and may declare the
/// curtailed energy; the cap is then re-solved so the curtailed energy matches.
/// Distribution measures cap feed-in at a fraction of the unit's nominal
/// power, scaled per step by the share of the 15-min period that the measure
/// covered.
struct RedispatchMeasure {
  std::string station_id;
  StepWindow window;
  MeasureKind kind = MeasureKind::Transmission;
  double cap_power_kw = 0.0;
  std::optional<double> target_energy_kwh;
  double cap_fraction = 0.0;
  double nominal_power_kw = 0.0;
  /// Empty means full coverage; one entry applies to every step; otherwise
  /// one entry per window step.
  std::vector<double> coverage;

  static RedispatchMeasure transmission(std::string station, StepWindow window,
                                        double cap_power_kw,
                                        std::optional<double> target_kwh = {});
  static RedispatchMeasure distribution(std::string station, StepWindow window,
                                        double cap_fraction,
                                        double nominal_power_kw,
                                        std::vector<double> coverage = {});

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
  double coverage_at(std::int64_t offset) const;
};

/// Linear interpolation of an hourly series onto the 15-min grid. Values are
/// anchored at the start of each hour; the last anchor is held.
TimeSeries resample_to_quarter(const TimeSeries& hourly);

/// Hourly means of consecutive groups of four 15-min values.
TimeSeries resample_to_hour(const TimeSeries& quarter);

struct TransmissionClip {
  TimeSeries series;
  double cap_kw = 0.0;
  /// Declared target energy exceeds the feed-in energy above zero.
  bool shortfall = false;
  int iterations = 0;
};

inline constexpr double kTargetRelTolerance = 1e-6;
inline constexpr int kMaxBisectionIterations = 100;

/// Curtailed top of the feed-in above the measure's cap, zero outside the
/// window. The output has the same extent as `feedin`.
TransmissionClip clip_transmission(const TimeSeries& feedin,
                                   const RedispatchMeasure& m);

TimeSeries clip_distribution(const TimeSeries& feedin,
                             const RedispatchMeasure& m);

/// Pointwise sum of 15-min series placed on [0, horizon), zero padded.
TimeSeries accumulate_measures(std::span<const TimeSeries> clipped,
                               std::int64_t horizon);

/// Curtailed energy for a given cap over a window of a 15-min series.
double curtailed_energy(const TimeSeries& feedin, StepWindow window,
                        double cap_kw);

struct SeriesStats {
  std::int64_t hours_with_measure = 0;
  double energy_kwh = 0.0;
  double eq_full_load_hours = 0.0;
};

/// Requires hourly resolution. Equivalent full-load hours are energy divided
/// by the series peak (0 for an all-zero series).
SeriesStats series_stats(const TimeSeries& s);

}  // namespace h2rd
