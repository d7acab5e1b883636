#include "h2rd/plant.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace h2rd {

std::string_view to_string(StorageOption s) {
  switch (s) {
    case StorageOption::PressureTank: return "pressure_tank";
    case StorageOption::SaltCavern: return "salt_cavern";
    case StorageOption::Free: return "free";
  }
  return "?";
}

StorageOption parse_storage_option(std::string_view text) {
  if (text == "pressure_tank") return StorageOption::PressureTank;
  if (text == "salt_cavern") return StorageOption::SaltCavern;
  if (text == "free") return StorageOption::Free;
  throw std::invalid_argument("unknown storage option '" + std::string(text) + "'");
}

void PlantSpec::validate() const {
  if (!(eps_peri > 0.0 && eps_total_nom > eps_peri))
    throw std::invalid_argument("need eps_total_nom > eps_peri > 0");
  if (!(f_loss_comp >= 0.0 && f_loss_comp < 1.0))
    throw std::invalid_argument("compressor loss must lie in [0, 1)");
  if (breakpoints < 2) throw std::invalid_argument("need at least 2 breakpoints");
  if (!(partload_gain >= 0.0 && partload_gain < 0.1))
    throw std::invalid_argument("part-load gain must lie in [0, 0.1)");
  if (!(eps_h2o >= 0.0 && water_price >= 0.0))
    throw std::invalid_argument("water parameters must be >= 0");
  if (!(eps_comp_pressure_tank >= 0.0 && eps_comp_salt_cavern >= 0.0 && eps_comp_free >= 0.0))
    throw std::invalid_argument("compressor specific energies must be >= 0");
}

double stack_specific_energy(double load, const PlantSpec& spec) {
  if (!(load >= 0.0 && load <= 1.0))
    throw std::invalid_argument("load must lie in [0, 1]");
  return spec.eps_nom_stack() * (1.0 - spec.partload_gain * (1.0 - load) / 0.1);
}

double compressor_spec_energy(StorageOption option, const PlantSpec& spec) {
  switch (option) {
    case StorageOption::PressureTank: return spec.eps_comp_pressure_tank;
    case StorageOption::SaltCavern: return spec.eps_comp_salt_cavern;
    case StorageOption::Free: return spec.eps_comp_free;
  }
  throw std::invalid_argument("unknown storage option");
}

StackLinearization linearize_stack(const PlantSpec& spec) {
  spec.validate();
  const int k_count = spec.breakpoints;
  StackLinearization lin;
  lin.breakpoints.reserve(static_cast<std::size_t>(k_count));
  for (int j = 0; j < k_count; ++j) {
    const double load = static_cast<double>(j) / (k_count - 1);
    const double eps = stack_specific_energy(load, spec);
    lin.breakpoints.push_back({load, eps, load / eps});
  }
  for (std::size_t k = 1; k < lin.breakpoints.size(); ++k) {
    const auto& a = lin.breakpoints[k - 1];
    const auto& b = lin.breakpoints[k];
    const double slope = (b.mass_per_nominal - a.mass_per_nominal) / (b.load - a.load);
    lin.segments.push_back({slope, a.mass_per_nominal - slope * a.load});
  }
  return lin;
}

double StackLinearization::envelope(double stack_kw, double nominal_kw) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : segments)
    best = std::min(best, s.slope * stack_kw + s.intercept_per_nominal * nominal_kw);
  return best;
}

}  // namespace h2rd
