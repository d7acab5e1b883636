#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace h2rd {

/// Supported step lengths. The enumerator value is the step length in minutes.
enum class Resolution : int { Quarter = 15, Hour = 60 };

double step_hours(Resolution r);
int step_minutes(Resolution r);
/// Accepts 15 or 60; throws std::invalid_argument otherwise.
Resolution resolution_from_minutes(int minutes);

/// Fixed-resolution sequence of nonnegative values (kW for power, kg/h for
/// mass flow). `start_index` is the offset of the first value in steps of the
/// series' own resolution. Immutable once constructed.
class TimeSeries {
 public:
  TimeSeries(Resolution resolution, std::vector<double> values,
             std::int64_t start_index = 0);

  static TimeSeries zeros(Resolution resolution, std::size_t length,
                          std::int64_t start_index = 0);
  static TimeSeries constant(Resolution resolution, std::size_t length,
                             double value, std::int64_t start_index = 0);

  Resolution resolution() const noexcept { return resolution_; }
  double step_hours() const noexcept { return h2rd::step_hours(resolution_); }
  std::int64_t start_index() const noexcept { return start_; }
  /// One past the last covered step.
  std::int64_t end_index() const noexcept {
    return start_ + static_cast<std::int64_t>(values_.size());
  }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Sum of value * step length (kWh for power series).
  double energy() const;
  double peak() const;
  double sum() const;

  bool operator==(const TimeSeries&) const = default;

 private:
  Resolution resolution_;
  std::vector<double> values_;
  std::int64_t start_;
};

std::string_view to_string(Resolution r);

}  // namespace h2rd
