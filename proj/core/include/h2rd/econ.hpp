#pragma once

#include <optional>

#include "h2rd/time_series.hpp"

namespace h2rd {

/// Annuity payment factor r(1+r)^t / ((1+r)^t - 1); 1/t at r = 0.
double annuity_factor(double rate, int years);

enum class OpexBasis {
  Absolute,         ///< opex_fix in currency per (unit * a)
  FractionOfCapex,  ///< opex_fix as a share of capex per year
};

/// Cost parameters of one plant component. Units follow the component's size
/// unit: kW for converters, kg for storage.
struct EconomicParams {
  double capex = 0.0;
  double opex_fix = 0.0;
  OpexBasis opex_fix_basis = OpexBasis::Absolute;
  /// Per unit of throughput (kWh or kg, depending on the component).
  double opex_var = 0.0;
  int depreciation_years = 1;
  double wacc = 0.0;
  /// Replaces the computed annuity, e.g. 1 for a rented capacity fee.
  std::optional<double> annuity_override;

  void validate() const;
  double annuity() const;
  double fixed_opex_per_unit() const;
  /// Annualized capex plus fixed opex for one unit of size.
  double annual_cost_per_unit() const { return capex * annuity() + fixed_opex_per_unit(); }
};

double annualized_capex(double size, const EconomicParams& p);

/// `throughput` is the period sum of flow times step length.
double annual_opex(double size, double throughput, const EconomicParams& p);

/// Sum of purchased power times step length times price.
double purchase_cost(const TimeSeries& purchased, double price);

/// Pay-as-produced PPA: the buyer pays for nominal * capacity factor in every
/// step, whether or not the energy is used.
double ppa_purchase_cost(double nominal_kw, const TimeSeries& capacity_factor,
                         double price);

/// Inputs for pricing a PPA at its levelized generation cost.
struct PpaCostInputs {
  double capex = 0.0;              ///< per kW
  double opex_fix = 0.0;           ///< per kW and year
  double opex_var = 0.0;           ///< per kWh
  int lifetime_years = 1;
  double annual_production = 0.0;  ///< kWh per kW and year
  double wacc = 0.0;
};

/// (capex * A + opex_fix + opex_var * production) / production.
double ppa_price_cost_based(const PpaCostInputs& in);

}  // namespace h2rd
