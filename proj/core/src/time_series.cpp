#include "h2rd/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace h2rd {

double step_hours(Resolution r) { return step_minutes(r) / 60.0; }

int step_minutes(Resolution r) { return static_cast<int>(r); }

Resolution resolution_from_minutes(int minutes) {
  switch (minutes) {
    case 15: return Resolution::Quarter;
    case 60: return Resolution::Hour;
    default:
      throw std::invalid_argument("unsupported resolution: " +
                                  std::to_string(minutes) + " min");
  }
}

std::string_view to_string(Resolution r) {
  return r == Resolution::Quarter ? "15min" : "60min";
}

TimeSeries::TimeSeries(Resolution resolution, std::vector<double> values,
                       std::int64_t start_index)
    : resolution_(resolution), values_(std::move(values)), start_(start_index) {
  if (resolution_ != Resolution::Quarter && resolution_ != Resolution::Hour)
    throw std::invalid_argument("TimeSeries: unsupported resolution");
  if (values_.empty())
    throw std::invalid_argument("TimeSeries: length must be at least 1");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("TimeSeries: value at position " +
                                  std::to_string(i) +
                                  " is negative or not finite");
  }
}

TimeSeries TimeSeries::zeros(Resolution resolution, std::size_t length,
                             std::int64_t start_index) {
  return constant(resolution, length, 0.0, start_index);
}

TimeSeries TimeSeries::constant(Resolution resolution, std::size_t length,
                                double value, std::int64_t start_index) {
  return TimeSeries(resolution, std::vector<double>(length, value),
                    start_index);
}

double TimeSeries::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double TimeSeries::energy() const { return sum() * step_hours(); }

double TimeSeries::peak() const {
  return *std::max_element(values_.begin(), values_.end());
}

}  // namespace h2rd
