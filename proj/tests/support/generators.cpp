#include "generators.hpp"

#include <algorithm>

namespace h2rd::gen {

std::vector<double> uniform(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

TimeSeries capacity_factors(Rng& rng, std::size_t n) {
  auto v = uniform(rng, n, -0.2, 1.0);
  for (auto& x : v) x = std::clamp(x, 0.0, 1.0);
  // Keep at least one productive step.
  v[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 0.9;
  return TimeSeries(Resolution::Hour, std::move(v));
}

TimeSeries availability(Rng& rng, std::size_t n, double scale) {
  auto v = uniform(rng, n, -0.5 * scale, scale);
  for (auto& x : v) x = std::max(0.0, x);
  return TimeSeries(Resolution::Hour, std::move(v));
}

ScenarioConfig random_scenario(Rng& rng, int max_steps) {
  ScenarioConfig c;
  c.horizon_steps = std::uniform_int_distribution<int>(4, std::max(4, max_steps))(rng);
  const auto n = static_cast<std::size_t>(c.horizon_steps);
  c.annual_demand_kg = std::uniform_real_distribution<double>(1e5, 5e6)(rng);
  const double need_kw = c.annual_demand_kg / 8760.0 * 55.0;
  c.inputs.cf_wind_off = capacity_factors(rng, n);
  c.inputs.cf_wind_on = capacity_factors(rng, n);
  c.inputs.cf_pv = capacity_factors(rng, n);
  c.inputs.rd_available = availability(rng, n, 2.0 * need_kw);
  c.prices.rd = std::uniform_real_distribution<double>(0.0, 0.1)(rng);
  const std::array<StorageOption, 3> options{StorageOption::PressureTank,
                                             StorageOption::SaltCavern, StorageOption::Free};
  c.storage = options[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
  c.month_block_steps = std::uniform_int_distribution<int>(1, c.horizon_steps)(rng);
  return c;
}

}  // namespace h2rd::gen
