#include "h2rd/econ.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace h2rd {

double annuity_factor(double rate, int years) {
  if (years < 1) throw std::invalid_argument("annuity_factor: years must be >= 1");
  if (!(rate >= 0.0 && rate < 1.0))
    throw std::invalid_argument("annuity_factor: rate must lie in [0, 1)");
  if (rate == 0.0) return 1.0 / years;
  const double growth = std::pow(1.0 + rate, years);
  return rate * growth / (growth - 1.0);
}

void EconomicParams::validate() const {
  if (!(capex >= 0.0)) throw std::invalid_argument("capex must be >= 0");
  if (!(wacc >= 0.0 && wacc < 1.0)) throw std::invalid_argument("wacc must lie in [0, 1)");
  if (depreciation_years < 1) throw std::invalid_argument("depreciation must be >= 1 year");
  if (opex_fix_basis == OpexBasis::FractionOfCapex && !(opex_fix >= 0.0 && opex_fix <= 1.0))
    throw std::invalid_argument("fixed opex fraction must lie in [0, 1]");
  if (opex_fix_basis == OpexBasis::Absolute && !(opex_fix >= 0.0))
    throw std::invalid_argument("fixed opex must be >= 0");
  if (!(opex_var >= 0.0)) throw std::invalid_argument("variable opex must be >= 0");
  if (annuity_override && !(*annuity_override >= 0.0))
    throw std::invalid_argument("annuity override must be >= 0");
}

double EconomicParams::annuity() const {
  return annuity_override ? *annuity_override : annuity_factor(wacc, depreciation_years);
}

double EconomicParams::fixed_opex_per_unit() const {
  return opex_fix_basis == OpexBasis::FractionOfCapex ? opex_fix * capex : opex_fix;
}

double annualized_capex(double size, const EconomicParams& p) {
  return size * p.capex * p.annuity();
}

double annual_opex(double size, double throughput, const EconomicParams& p) {
  return size * p.fixed_opex_per_unit() + throughput * p.opex_var;
}

double purchase_cost(const TimeSeries& purchased, double price) {
  return purchased.energy() * price;
}

double ppa_purchase_cost(double nominal_kw, const TimeSeries& capacity_factor,
                         double price) {
  return nominal_kw * capacity_factor.energy() * price;
}

double ppa_price_cost_based(const PpaCostInputs& in) {
  if (!(in.annual_production > 0.0))
    throw std::invalid_argument("annual production must be > 0");
  if (!(in.capex >= 0.0 && in.opex_fix >= 0.0 && in.opex_var >= 0.0))
    throw std::invalid_argument("PPA cost inputs must be >= 0");
  const double annual = in.capex * annuity_factor(in.wacc, in.lifetime_years) +
                        in.opex_fix + in.opex_var * in.annual_production;
  return annual / in.annual_production;
}

}  // namespace h2rd
