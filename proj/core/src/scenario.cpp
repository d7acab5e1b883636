#include "h2rd/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "h2rd/error.hpp"

namespace h2rd {

std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::PpaRef: return "PPA_REF";
    case ScenarioKind::RdOnly: return "RD_ONLY";
    case ScenarioKind::RdPpa: return "RD_PPA";
    case ScenarioKind::FirstMover: return "FM";
    case ScenarioKind::FirstMoverRd: return "FM_RD";
  }
  return "?";
}

ScenarioKind parse_scenario_kind(std::string_view text) {
  for (auto k : {ScenarioKind::PpaRef, ScenarioKind::RdOnly, ScenarioKind::RdPpa,
                 ScenarioKind::FirstMover, ScenarioKind::FirstMoverRd})
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown scenario kind '" + std::string(text) + "'");
}

PurchaseOptions purchase_options(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::PpaRef: return {false, true, false, false, false};
    case ScenarioKind::RdOnly: return {true, false, false, false, false};
    case ScenarioKind::RdPpa: return {true, true, false, false, false};
    case ScenarioKind::FirstMover: return {false, true, true, true, false};
    case ScenarioKind::FirstMoverRd: return {true, true, true, true, true};
  }
  throw std::invalid_argument("unknown scenario kind");
}

std::string_view symbol(StepVar v) {
  static constexpr std::array<std::string_view, kStepVarCount> names{
      "P_RD",   "P_WindOff", "P_WindOn", "P_PV",     "P_Grid",   "P_Ely",   "P_Stack", "P_Peri",
      "P_Comp", "P_ElySys",  "m_Ely",    "m_StoIn", "m_StoOut", "m_Sto",   "m_H2O"};
  return names[static_cast<std::size_t>(v)];
}

std::string_view symbol(SizeVar v) {
  static constexpr std::array<std::string_view, kSizeVarCount> names{
      "P_nom_Ely",     "P_nom_Stack",  "P_nom_Peri", "P_nom_Comp",
      "P_nom_WindOff", "P_nom_WindOn", "P_nom_PV",   "m_nom_Sto"};
  return names[static_cast<std::size_t>(v)];
}

namespace {

void check_series(const std::optional<TimeSeries>& s, int horizon, const char* name,
                  bool fraction) {
  if (!s) return;
  if (s->resolution() != Resolution::Hour)
    throw std::invalid_argument(std::string(name) + " must be hourly");
  if (s->size() != static_cast<std::size_t>(horizon))
    throw std::invalid_argument(std::string(name) + " has " + std::to_string(s->size()) +
                                " steps, horizon is " + std::to_string(horizon));
  if (fraction)
    for (double v : s->values())
      if (v > 1.0) throw std::invalid_argument(std::string(name) + " exceeds 1");
}

double value_or_zero(const std::optional<TimeSeries>& s, int t) {
  return s ? (*s)[static_cast<std::size_t>(t)] : 0.0;
}

double sum_or_zero(const std::optional<TimeSeries>& s) { return s ? s->sum() : 0.0; }

}  // namespace

void ScenarioConfig::validate() const {
  if (horizon_steps < 1) throw std::invalid_argument("horizon must be at least one step");
  if (!(annual_demand_kg >= 0.0) || !std::isfinite(annual_demand_kg))
    throw std::invalid_argument("annual demand must be finite and >= 0");
  prices.validate();
  if (month_block_steps && *month_block_steps < 1)
    throw std::invalid_argument("month block must be at least one step");
  check_series(inputs.cf_wind_off, horizon_steps, "cf_wind_off", true);
  check_series(inputs.cf_wind_on, horizon_steps, "cf_wind_on", true);
  check_series(inputs.cf_pv, horizon_steps, "cf_pv", true);
  check_series(inputs.rd_available, horizon_steps, "rd_available", false);
}

int ScenarioConfig::month_block() const {
  return month_block_steps ? *month_block_steps : std::min(730, horizon_steps);
}

TimeSeries flat_demand(double annual_kg, int steps) {
  if (!(annual_kg >= 0.0)) throw std::invalid_argument("annual demand must be >= 0");
  if (steps < 1) throw std::invalid_argument("demand needs at least one step");
  return TimeSeries::constant(Resolution::Hour, static_cast<std::size_t>(steps),
                              annual_kg / kHoursPerYear);
}

ScenarioProblem build_problem(const ScenarioConfig& cfg, const ParameterSet& params) {
  cfg.validate();
  params.validate();

  ScenarioProblem sp;
  sp.config = cfg;
  sp.params = params;
  const int T = cfg.horizon_steps;
  const double dt = step_hours(Resolution::Hour);
  const double w = kHoursPerYear / (T * dt);
  sp.layout.horizon = T;
  sp.period_weight = w;
  sp.step_hours = dt;
  sp.demand.assign(static_cast<std::size_t>(T), cfg.annual_demand_kg / kHoursPerYear);

  const auto opts = purchase_options(cfg.kind);
  const auto& plant = params.plant;
  const auto storage = params.storage(cfg.storage);
  const double eps_comp = compressor_spec_energy(cfg.storage, plant);
  const auto lin = linearize_stack(plant);
  const auto& in = cfg.inputs;
  const auto& pr = cfg.prices;
  auto& lp = sp.lp;
  const auto& L = sp.layout;

  // Sizing variables.
  auto add_size = [&](SizeVar v, double cost, bool enabled = true) {
    lp.add_variable(std::string(symbol(v)), std::nullopt, enabled ? cost : 0.0, 0.0,
                    enabled ? kInf : 0.0);
  };
  add_size(SizeVar::P_nom_Ely, params.electrolyser.annual_cost_per_unit());
  add_size(SizeVar::P_nom_Stack, 0.0);
  add_size(SizeVar::P_nom_Peri, 0.0);
  add_size(SizeVar::P_nom_Comp, params.compressor.annual_cost_per_unit());
  // Pay-as-produced: the nominal contracted power buys its whole production.
  add_size(SizeVar::P_nom_WindOff, pr.ppa_wind_off * sum_or_zero(in.cf_wind_off) * dt * w,
           opts.ppa);
  add_size(SizeVar::P_nom_WindOn, pr.ppa_wind_on * sum_or_zero(in.cf_wind_on) * dt * w,
           opts.ppa);
  add_size(SizeVar::P_nom_PV, pr.ppa_pv * sum_or_zero(in.cf_pv) * dt * w, opts.ppa);
  add_size(SizeVar::M_nom_Sto, storage.annual_cost_per_unit());

  // Per-step variables, symbol-major.
  for (int v = 0; v < kStepVarCount; ++v) {
    const auto sv = static_cast<StepVar>(v);
    double cost = 0.0;
    bool enabled = true;
    switch (sv) {
      case StepVar::P_RD: cost = pr.rd * dt * w; enabled = opts.rd; break;
      case StepVar::P_WindOff:
      case StepVar::P_WindOn:
      case StepVar::P_PV: enabled = opts.ppa; break;
      case StepVar::P_Grid: cost = pr.grid * dt * w; enabled = opts.grid; break;
      case StepVar::M_Ely: cost = plant.water_cost_per_kg() * dt * w; break;
      case StepVar::M_StoIn: cost = storage.opex_var * dt * w; break;
      default: break;
    }
    for (int t = 0; t < T; ++t)
      lp.add_variable(std::string(symbol(sv)), t, enabled ? cost : 0.0, 0.0,
                      enabled ? kInf : 0.0);
  }

  auto x = [&](StepVar v, int t) { return L.step(v, t); };
  auto s = [&](SizeVar v) { return L.size(v); };
  using SV = StepVar;
  using ZV = SizeVar;

  // Electricity bus bar.
  for (int t = 0; t < T; ++t)
    lp.add_row("bus_balance", t, RowSense::Equal, 0.0,
               {{x(SV::P_RD, t), 1.0}, {x(SV::P_WindOff, t), 1.0}, {x(SV::P_WindOn, t), 1.0},
                {x(SV::P_PV, t), 1.0}, {x(SV::P_Grid, t), 1.0}, {x(SV::P_Ely, t), -1.0},
                {x(SV::P_Comp, t), -1.0}});
  for (int t = 0; t < T; ++t)
    lp.add_row("ely_split", t, RowSense::Equal, 0.0,
               {{x(SV::P_Ely, t), 1.0}, {x(SV::P_Peri, t), -1.0}, {x(SV::P_Stack, t), -1.0}});
  for (int t = 0; t < T; ++t)
    lp.add_row("system_power", t, RowSense::Equal, 0.0,
               {{x(SV::P_ElySys, t), 1.0}, {x(SV::P_Ely, t), -1.0}, {x(SV::P_Comp, t), -1.0}});
  for (int t = 0; t < T; ++t)
    lp.add_row("peripherals", t, RowSense::Equal, 0.0,
               {{x(SV::P_Peri, t), 1.0}, {x(SV::M_Ely, t), -plant.eps_peri}});
  for (int t = 0; t < T; ++t)
    lp.add_row("compressor", t, RowSense::Equal, 0.0,
               {{x(SV::P_Comp, t), 1.0}, {x(SV::M_Ely, t), -eps_comp}});
  for (int t = 0; t < T; ++t)
    lp.add_row("water", t, RowSense::Equal, 0.0,
               {{x(SV::M_H2O, t), 1.0}, {x(SV::M_Ely, t), -plant.eps_h2o}});
  // Hydrogen bus bar.
  for (int t = 0; t < T; ++t)
    lp.add_row("hydrogen_balance", t, RowSense::Equal, sp.demand[static_cast<std::size_t>(t)],
               {{x(SV::M_Ely, t), 1.0 - plant.f_loss_comp}, {x(SV::M_StoIn, t), -1.0},
                {x(SV::M_StoOut, t), 1.0}});
  // Storage level, cyclic over the horizon.
  for (int t = 0; t < T; ++t) {
    const int prev = t == 0 ? T - 1 : t - 1;
    lp.add_row("storage_level", t, RowSense::Equal, 0.0,
               {{x(SV::M_Sto, t), 1.0}, {x(SV::M_Sto, prev), -1.0}, {x(SV::M_StoIn, t), -dt},
                {x(SV::M_StoOut, t), dt}});
  }

  if (opts.ppa) {
    const std::array<std::tuple<const char*, SV, ZV, const std::optional<TimeSeries>*>, 3> ppas{{
        {"ppa_wind_off", SV::P_WindOff, ZV::P_nom_WindOff, &in.cf_wind_off},
        {"ppa_wind_on", SV::P_WindOn, ZV::P_nom_WindOn, &in.cf_wind_on},
        {"ppa_pv", SV::P_PV, ZV::P_nom_PV, &in.cf_pv},
    }};
    for (const auto& [family, var, nom, cf] : ppas)
      for (int t = 0; t < T; ++t)
        lp.add_row(family, t, RowSense::LessEqual, 0.0,
                   {{x(var, t), 1.0}, {s(nom), -value_or_zero(*cf, t)}});
  }
  if (opts.rd)
    for (int t = 0; t < T; ++t)
      lp.add_row("rd_availability", t, RowSense::LessEqual, value_or_zero(in.rd_available, t),
                 {{x(SV::P_RD, t), 1.0}});

  const std::array<std::tuple<const char*, SV, ZV>, 5> capacities{{
      {"ely_capacity", SV::P_Ely, ZV::P_nom_Ely},
      {"stack_capacity", SV::P_Stack, ZV::P_nom_Stack},
      {"peri_capacity", SV::P_Peri, ZV::P_nom_Peri},
      {"comp_capacity", SV::P_Comp, ZV::P_nom_Comp},
      {"storage_capacity", SV::M_Sto, ZV::M_nom_Sto},
  }};
  for (const auto& [family, var, nom] : capacities)
    for (int t = 0; t < T; ++t)
      lp.add_row(family, t, RowSense::LessEqual, 0.0, {{x(var, t), 1.0}, {s(nom), -1.0}});

  // Stack output below every chord of the concave part-load curve.
  for (int t = 0; t < T; ++t)
    for (const auto& seg : lin.segments)
      lp.add_row("stack_chord", t, RowSense::LessEqual, 0.0,
                 {{x(SV::M_Ely, t), 1.0}, {x(SV::P_Stack, t), -seg.slope},
                  {s(ZV::P_nom_Stack), -seg.intercept_per_nominal}});
  // ...and at least the output at nominal efficiency.
  for (int t = 0; t < T; ++t)
    lp.add_row("stack_lower", t, RowSense::LessEqual, 0.0,
               {{x(SV::P_Stack, t), 1.0}, {x(SV::M_Ely, t), -plant.eps_nom_stack()}});

  if (opts.monthly_matching) {
    const int block = cfg.month_block();
    for (int begin = 0, l = 0; begin < T; begin += block, ++l) {
      const int end = std::min(T, begin + block);
      std::vector<LpTerm> terms;
      double off = 0.0, on = 0.0, pv = 0.0;
      for (int t = begin; t < end; ++t) {
        terms.emplace_back(x(SV::P_ElySys, t), 1.0);
        if (opts.rd_exempt_from_matching) terms.emplace_back(x(SV::P_RD, t), -1.0);
        off += value_or_zero(in.cf_wind_off, t);
        on += value_or_zero(in.cf_wind_on, t);
        pv += value_or_zero(in.cf_pv, t);
      }
      terms.emplace_back(s(ZV::P_nom_WindOff), -off);
      terms.emplace_back(s(ZV::P_nom_WindOn), -on);
      terms.emplace_back(s(ZV::P_nom_PV), -pv);
      lp.add_row("monthly_matching", l, RowSense::LessEqual, 0.0, std::move(terms));
    }
  }

  // Stack and peripheral nominals follow the electrolyser nominal in the
  // ratio of their specific energies at nominal load.
  lp.add_row("size_stack", std::nullopt, RowSense::Equal, 0.0,
             {{s(ZV::P_nom_Stack), 1.0},
              {s(ZV::P_nom_Ely), -plant.eps_nom_stack() / plant.eps_total_nom}});
  lp.add_row("size_peri", std::nullopt, RowSense::Equal, 0.0,
             {{s(ZV::P_nom_Peri), 1.0}, {s(ZV::P_nom_Ely), -plant.eps_peri / plant.eps_total_nom}});
  return sp;
}

double Dispatch::sum(StepVar v) const {
  const auto& s = (*this)[v];
  return std::accumulate(s.begin(), s.end(), 0.0);
}

double CostTerms::total() const {
  double sum = 0.0;
  for (const auto& [name, v] : items()) sum += v;
  return sum;
}

std::vector<std::pair<std::string_view, double>> CostTerms::items() const {
  return {{"ely_capex", ely_capex},     {"ely_opex_fix", ely_opex_fix}, {"water", water},
          {"comp_capex", comp_capex},   {"comp_opex_fix", comp_opex_fix},
          {"sto_capex", sto_capex},     {"sto_opex_fix", sto_opex_fix},
          {"sto_usage", sto_usage},     {"pp_rd", pp_rd},
          {"pp_grid", pp_grid},         {"pp_wind_off", pp_wind_off},
          {"pp_wind_on", pp_wind_on},   {"pp_pv", pp_pv}};
}

CostTerms compute_costs(const ScenarioProblem& sp, const Sizes& z, const Dispatch& d) {
  const auto& p = sp.params;
  const auto& cfg = sp.config;
  const auto storage = p.storage(cfg.storage);
  const double scale = sp.step_hours * sp.period_weight;
  CostTerms c;
  c.ely_capex = annualized_capex(z.electrolyser_kw, p.electrolyser);
  c.ely_opex_fix = annual_opex(z.electrolyser_kw, 0.0, p.electrolyser);
  c.water = p.plant.water_cost_per_kg() * d.sum(StepVar::M_Ely) * scale;
  c.comp_capex = annualized_capex(z.compressor_kw, p.compressor);
  c.comp_opex_fix = annual_opex(z.compressor_kw, 0.0, p.compressor);
  c.sto_capex = annualized_capex(z.storage_kg, storage);
  c.sto_opex_fix = annual_opex(z.storage_kg, 0.0, storage);
  c.sto_usage = storage.opex_var * d.sum(StepVar::M_StoIn) * scale;
  c.pp_rd = cfg.prices.rd * d.sum(StepVar::P_RD) * scale;
  c.pp_grid = cfg.prices.grid * d.sum(StepVar::P_Grid) * scale;
  const auto& in = cfg.inputs;
  c.pp_wind_off = cfg.prices.ppa_wind_off * z.wind_off_kw * sum_or_zero(in.cf_wind_off) * scale;
  c.pp_wind_on = cfg.prices.ppa_wind_on * z.wind_on_kw * sum_or_zero(in.cf_wind_on) * scale;
  c.pp_pv = cfg.prices.ppa_pv * z.pv_kw * sum_or_zero(in.cf_pv) * scale;
  return c;
}

Solution decode_primal(const ScenarioProblem& sp, std::span<const double> x,
                       double solver_objective) {
  if (x.size() != sp.lp.num_vars())
    throw SolveError("primal vector has " + std::to_string(x.size()) + " entries, expected " +
                     std::to_string(sp.lp.num_vars()));
  const auto& L = sp.layout;
  // Solvers may return tiny negative values inside their tolerance.
  auto at = [&](int j) { return std::max(0.0, x[static_cast<std::size_t>(j)]); };

  Solution sol;
  sol.kind = sp.config.kind;
  sol.storage = sp.config.storage;
  sol.annual_demand_kg = sp.config.annual_demand_kg;
  sol.period_weight = sp.period_weight;
  sol.step_hours = sp.step_hours;
  auto& z = sol.sizes;
  z.electrolyser_kw = at(L.size(SizeVar::P_nom_Ely));
  z.stack_kw = at(L.size(SizeVar::P_nom_Stack));
  z.peripherals_kw = at(L.size(SizeVar::P_nom_Peri));
  z.compressor_kw = at(L.size(SizeVar::P_nom_Comp));
  z.wind_off_kw = at(L.size(SizeVar::P_nom_WindOff));
  z.wind_on_kw = at(L.size(SizeVar::P_nom_WindOn));
  z.pv_kw = at(L.size(SizeVar::P_nom_PV));
  z.storage_kg = at(L.size(SizeVar::M_nom_Sto));
  for (int v = 0; v < kStepVarCount; ++v) {
    auto& series = sol.dispatch.series[static_cast<std::size_t>(v)];
    series.resize(static_cast<std::size_t>(L.horizon));
    for (int t = 0; t < L.horizon; ++t)
      series[static_cast<std::size_t>(t)] = at(L.step(static_cast<StepVar>(v), t));
  }
  const auto& avail = sp.config.inputs.rd_available;
  sol.rd_available = avail ? std::vector<double>(avail->values().begin(), avail->values().end())
                           : std::vector<double>(static_cast<std::size_t>(L.horizon), 0.0);

  sol.costs = compute_costs(sp, z, sol.dispatch);
  sol.objective = solver_objective;
  const double total = sol.costs.total();
  if (std::abs(total - solver_objective) >
      kObjectiveRecomputeTolerance * std::max(1.0, std::abs(solver_objective)))
    throw SolveError("recomputed cost " + std::to_string(total) +
                     " does not match solver objective " + std::to_string(solver_objective));
  return sol;
}

Solution decode_solution(const ScenarioProblem& sp, const SolveResult& result) {
  if (!result.optimal())
    throw SolveError("cannot decode a solve with status '" +
                     std::string(to_string(result.status)) + "'");
  return decode_primal(sp, result.primal, result.objective);
}

ScenarioRun run_scenario(const ScenarioConfig& cfg, const ParameterSet& params,
                         const LpBackend& backend, const SolveOptions& options) {
  const auto sp = build_problem(cfg, params);
  ScenarioRun run;
  run.result = backend.solve(sp.lp, options);
  if (run.result.optimal()) run.solution = decode_solution(sp, run.result);
  return run;
}

}  // namespace h2rd
