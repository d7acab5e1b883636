#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "h2rd/scenario.hpp"

namespace h2rd {

struct OhscBreakdown {
  double ohsc = 0.0;  ///< currency per kg
  /// Cost terms divided by the annual hydrogen mass, in CostTerms::items() order.
  std::vector<std::pair<std::string_view, double>> contributions;
};

/// Total annual cost over annual hydrogen mass. Throws std::invalid_argument
/// for annual_kg <= 0.
OhscBreakdown ohsc(const Solution& sol, double annual_kg);
inline OhscBreakdown ohsc(const Solution& sol) { return ohsc(sol, sol.annual_demand_kg); }

/// Shares of PPA, redispatch and grid energy in the electrolyser system
/// consumption.
struct PowerShares {
  double ppa = 0.0;
  double rd = 0.0;
  double grid = 0.0;
};
/// Throws std::invalid_argument when the system consumed nothing.
PowerShares power_shares(const Solution& sol);

/// Purchased over available redispatch energy. Throws on zero availability.
double rd_usage_share(const Solution& sol, std::span<const double> availability);
inline double rd_usage_share(const Solution& sol) {
  return rd_usage_share(sol, sol.rd_available);
}

/// Redispatch energy over electrolyser nominal power, in hours per year.
/// Throws when the electrolyser has zero size.
double rd_utilization(const Solution& sol);

/// OHSC reduction of `variant` against `base`, split into purchase,
/// electrolyser and storage contributions (currency per kg). The redispatch
/// term is minus the variant's additional redispatch purchase cost.
struct Decomposition {
  double total = 0.0;
  double red_rd = 0.0;
  double red_ppa = 0.0;
  double red_ely = 0.0;
  double red_sto = 0.0;
  /// total minus the four terms; equals the compressor, water, storage usage
  /// and grid cost deltas.
  double residual = 0.0;
};

/// Throws std::invalid_argument unless both solutions share demand and horizon.
Decomposition decompose_reduction(const Solution& base, const Solution& variant);

/// Residual minus the cost deltas it is meant to contain; zero up to rounding.
double reconciliation_gap(const Solution& base, const Solution& variant,
                          const Decomposition& d);

struct DemandSearch {
  bool reached = false;
  double annual_kg = 0.0;
  double electrolyser_kw = 0.0;
  int solves = 0;
  std::string message;
};

/// Relative tolerance of find_demand_for_size.
inline constexpr double kDemandSearchTolerance = 0.005;

/// Annual demand at which the optimal electrolyser size matches `target_kw`
/// within kDemandSearchTolerance. Uses bisection; the size is non-decreasing
/// in demand. Failure to reach the target is reported, not thrown.
DemandSearch find_demand_for_size(double target_kw, const ScenarioConfig& cfg,
                                  const ParameterSet& params, const LpBackend& backend,
                                  const SolveOptions& options = {});

}  // namespace h2rd
