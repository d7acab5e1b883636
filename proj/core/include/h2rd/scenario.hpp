#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "h2rd/lp_problem.hpp"
#include "h2rd/params.hpp"
#include "h2rd/plant.hpp"
#include "h2rd/solver.hpp"
#include "h2rd/time_series.hpp"

namespace h2rd {

/// Power purchase scenarios.
///   PpaRef        three pay-as-produced PPAs only
///   RdOnly        regional redispatch power only
///   RdPpa         redispatch plus PPAs
///   FirstMover    PPAs plus grid mix, monthly PPA matching of system demand
///   FirstMoverRd  as FirstMover plus redispatch; redispatch is exempt from
///                 the monthly matching
enum class ScenarioKind { PpaRef, RdOnly, RdPpa, FirstMover, FirstMoverRd };

std::string_view to_string(ScenarioKind k);
/// Accepts PPA_REF, RD_ONLY, RD_PPA, FM, FM_RD.
ScenarioKind parse_scenario_kind(std::string_view text);

struct PurchaseOptions {
  bool rd = false;
  bool ppa = false;
  bool grid = false;
  bool monthly_matching = false;
  bool rd_exempt_from_matching = false;
};
PurchaseOptions purchase_options(ScenarioKind k);

/// Hourly input series. Capacity factors are dimensionless in [0, 1];
/// availability is in kW. Missing series are treated as zero.
struct ScenarioInputs {
  std::optional<TimeSeries> cf_wind_off;
  std::optional<TimeSeries> cf_wind_on;
  std::optional<TimeSeries> cf_pv;
  std::optional<TimeSeries> rd_available;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::PpaRef;
  StorageOption storage = StorageOption::SaltCavern;
  Prices prices;
  double annual_demand_kg = 0.0;
  int horizon_steps = 8760;
  /// Length of the monthly matching blocks; default min(730, horizon).
  std::optional<int> month_block_steps;
  ScenarioInputs inputs;

  /// Throws std::invalid_argument on inconsistent lengths or values.
  void validate() const;
  int month_block() const;
};

inline constexpr double kHoursPerYear = 8760.0;

/// Constant demand rate annual_kg / 8760 kg/h over `steps` hourly steps.
TimeSeries flat_demand(double annual_kg, int steps);

/// Per-step variables in emission order.
enum class StepVar : int {
  P_RD, P_WindOff, P_WindOn, P_PV, P_Grid, P_Ely, P_Stack, P_Peri, P_Comp, P_ElySys,
  M_Ely, M_StoIn, M_StoOut, M_Sto, M_H2O
};
inline constexpr int kStepVarCount = 15;

/// Sizing variables in emission order.
enum class SizeVar : int {
  P_nom_Ely, P_nom_Stack, P_nom_Peri, P_nom_Comp, P_nom_WindOff, P_nom_WindOn, P_nom_PV,
  M_nom_Sto
};
inline constexpr int kSizeVarCount = 8;

std::string_view symbol(StepVar v);
std::string_view symbol(SizeVar v);

/// Column layout: sizes first, then each per-step symbol over all steps.
struct VariableLayout {
  int horizon = 0;
  int size(SizeVar v) const { return static_cast<int>(v); }
  int step(StepVar v, int t) const {
    return kSizeVarCount + static_cast<int>(v) * horizon + t;
  }
};

/// The built LP together with everything needed to decode and cost it.
struct ScenarioProblem {
  LpProblem lp;
  VariableLayout layout;
  ScenarioConfig config;
  ParameterSet params;
  /// Scales period flow costs to one year: 8760 / (T * dt).
  double period_weight = 1.0;
  double step_hours = 1.0;
  std::vector<double> demand;  ///< kg/h per step
};

ScenarioProblem build_problem(const ScenarioConfig& cfg, const ParameterSet& params);

struct Sizes {
  double electrolyser_kw = 0.0;
  double stack_kw = 0.0;
  double peripherals_kw = 0.0;
  double compressor_kw = 0.0;
  double wind_off_kw = 0.0;
  double wind_on_kw = 0.0;
  double pv_kw = 0.0;
  double storage_kg = 0.0;
};

/// Per-step operating values, one vector per per-step symbol.
struct Dispatch {
  std::array<std::vector<double>, kStepVarCount> series;

  const std::vector<double>& operator[](StepVar v) const {
    return series[static_cast<std::size_t>(v)];
  }
  std::vector<double>& operator[](StepVar v) { return series[static_cast<std::size_t>(v)]; }
  double sum(StepVar v) const;
};

/// Annual cost terms (currency per year).
struct CostTerms {
  double ely_capex = 0.0;
  double ely_opex_fix = 0.0;
  double water = 0.0;
  double comp_capex = 0.0;
  double comp_opex_fix = 0.0;
  double sto_capex = 0.0;
  double sto_opex_fix = 0.0;
  double sto_usage = 0.0;
  double pp_rd = 0.0;
  double pp_grid = 0.0;
  double pp_wind_off = 0.0;
  double pp_wind_on = 0.0;
  double pp_pv = 0.0;

  double electrolyser() const { return ely_capex + ely_opex_fix; }
  double compressor() const { return comp_capex + comp_opex_fix; }
  double storage() const { return sto_capex + sto_opex_fix; }
  double ppa() const { return pp_wind_off + pp_wind_on + pp_pv; }
  double total() const;
  /// (name, value) pairs in a fixed order.
  std::vector<std::pair<std::string_view, double>> items() const;
};

struct Solution {
  ScenarioKind kind = ScenarioKind::PpaRef;
  StorageOption storage = StorageOption::SaltCavern;
  double objective = 0.0;
  Sizes sizes;
  Dispatch dispatch;
  CostTerms costs;
  double annual_demand_kg = 0.0;
  double period_weight = 1.0;
  double step_hours = 1.0;
  std::vector<double> rd_available;
};

/// Relative tolerance between the solver objective and the cost terms
/// recomputed from the decoded solution.
inline constexpr double kObjectiveRecomputeTolerance = 1e-6;

/// Throws SolveError unless `result` is optimal, and if the recomputed cost
/// terms disagree with the solver objective.
Solution decode_solution(const ScenarioProblem& problem, const SolveResult& result);
Solution decode_primal(const ScenarioProblem& problem, std::span<const double> x,
                       double solver_objective);

/// Cost terms of a decoded operating point, priced with the problem's
/// parameters and period weight.
CostTerms compute_costs(const ScenarioProblem& problem, const Sizes& sizes,
                        const Dispatch& dispatch);

/// Convenience: build, solve with the given backend, decode when optimal.
struct ScenarioRun {
  SolveResult result;
  std::optional<Solution> solution;
};
ScenarioRun run_scenario(const ScenarioConfig& cfg, const ParameterSet& params,
                         const LpBackend& backend, const SolveOptions& options = {});

}  // namespace h2rd
