#pragma once

#include <string_view>
#include <vector>

namespace h2rd {

enum class StorageOption { PressureTank, SaltCavern, Free };

std::string_view to_string(StorageOption s);
/// Accepts "pressure_tank", "salt_cavern", "free"; throws std::invalid_argument.
StorageOption parse_storage_option(std::string_view text);

/// Technical parameters of the electrolyser plant.
struct PlantSpec {
  double eps_total_nom = 52.5;  ///< kWh/kg at nominal load incl. peripherals
  double eps_peri = 3.33;       ///< kWh/kg
  /// Relative drop of stack specific energy per 10 % load reduction.
  double partload_gain = 0.01;
  double eps_h2o = 14.0;        ///< kg water per kg H2
  double water_price = 3.725;   ///< per m3
  double f_loss_comp = 0.005;
  double eps_comp_pressure_tank = 1.287;  ///< kWh/kg
  double eps_comp_salt_cavern = 0.0;
  double eps_comp_free = 0.397;
  int breakpoints = 21;

  void validate() const;
  double eps_nom_stack() const { return eps_total_nom - eps_peri; }
  /// Water cost per kg of hydrogen produced (1 m3 of water = 1000 kg).
  double water_cost_per_kg() const { return eps_h2o * water_price / 1000.0; }
};

/// Stack specific energy at load fraction `load` (kWh/kg). Falls linearly
/// with decreasing load by `partload_gain` per 10 % of load.
double stack_specific_energy(double load, const PlantSpec& spec);

double compressor_spec_energy(StorageOption option, const PlantSpec& spec);

struct StackBreakpoint {
  double load = 0.0;              ///< fraction of nominal stack power
  double eps = 0.0;               ///< kWh/kg
  double mass_per_nominal = 0.0;  ///< kg/h per kW of stack nominal power
};

/// Chord k of the hydrogen output curve:
///   m_dot <= slope * P_stack + intercept_per_nominal * P_nom_stack
struct StackSegment {
  double slope = 0.0;                  ///< kg/kWh
  double intercept_per_nominal = 0.0;  ///< kg/h per kW of stack nominal power
};

/// Concave output curve of the stack replaced by the minimum over its chords.
/// Breakpoints j = 0..K-1 sit at load j/(K-1); segment k joins breakpoints
/// k and k+1.
struct StackLinearization {
  std::vector<StackBreakpoint> breakpoints;
  std::vector<StackSegment> segments;

  /// Minimum over chords at the given stack power and nominal (kg/h).
  double envelope(double stack_kw, double nominal_kw) const;
};

StackLinearization linearize_stack(const PlantSpec& spec);

}  // namespace h2rd
