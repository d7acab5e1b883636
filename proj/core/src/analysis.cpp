#include "h2rd/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace h2rd {

OhscBreakdown ohsc(const Solution& sol, double annual_kg) {
  if (!(annual_kg > 0.0)) throw std::invalid_argument("OHSC needs a positive annual demand");
  OhscBreakdown out;
  for (const auto& [name, value] : sol.costs.items()) {
    out.contributions.emplace_back(name, value / annual_kg);
    out.ohsc += value / annual_kg;
  }
  return out;
}

PowerShares power_shares(const Solution& sol) {
  const auto& d = sol.dispatch;
  const double total = d.sum(StepVar::P_ElySys);
  if (!(total > 0.0)) throw std::invalid_argument("power shares need nonzero consumption");
  PowerShares s;
  s.ppa = (d.sum(StepVar::P_WindOff) + d.sum(StepVar::P_WindOn) + d.sum(StepVar::P_PV)) / total;
  s.rd = d.sum(StepVar::P_RD) / total;
  s.grid = d.sum(StepVar::P_Grid) / total;
  return s;
}

double rd_usage_share(const Solution& sol, std::span<const double> availability) {
  const double avail = std::accumulate(availability.begin(), availability.end(), 0.0);
  if (!(avail > 0.0)) throw std::invalid_argument("redispatch usage needs nonzero availability");
  return sol.dispatch.sum(StepVar::P_RD) / avail;
}

double rd_utilization(const Solution& sol) {
  if (!(sol.sizes.electrolyser_kw > 0.0))
    throw std::invalid_argument("utilization needs a nonzero electrolyser");
  return sol.dispatch.sum(StepVar::P_RD) * sol.step_hours / sol.sizes.electrolyser_kw;
}

namespace {

void check_comparable(const Solution& a, const Solution& b) {
  if (a.annual_demand_kg != b.annual_demand_kg)
    throw std::invalid_argument("solutions have different demand");
  if (a.dispatch[StepVar::M_Ely].size() != b.dispatch[StepVar::M_Ely].size())
    throw std::invalid_argument("solutions have different horizons");
  if (!(a.annual_demand_kg > 0.0)) throw std::invalid_argument("demand must be positive");
}

}  // namespace

Decomposition decompose_reduction(const Solution& base, const Solution& variant) {
  check_comparable(base, variant);
  const double D = base.annual_demand_kg;
  const auto& b = base.costs;
  const auto& v = variant.costs;
  Decomposition d;
  d.total = (b.total() - v.total()) / D;
  d.red_rd = (b.pp_rd - v.pp_rd) / D;
  d.red_ppa = (b.ppa() - v.ppa()) / D;
  d.red_ely = (b.electrolyser() - v.electrolyser()) / D;
  d.red_sto = (b.storage() - v.storage()) / D;
  d.residual = d.total - d.red_rd - d.red_ppa - d.red_ely - d.red_sto;
  return d;
}

double reconciliation_gap(const Solution& base, const Solution& variant,
                          const Decomposition& d) {
  const auto& b = base.costs;
  const auto& v = variant.costs;
  const double expected = ((b.compressor() - v.compressor()) + (b.water - v.water) +
                           (b.sto_usage - v.sto_usage) + (b.pp_grid - v.pp_grid)) /
                          base.annual_demand_kg;
  return d.residual - expected;
}

DemandSearch find_demand_for_size(double target_kw, const ScenarioConfig& cfg,
                                  const ParameterSet& params, const LpBackend& backend,
                                  const SolveOptions& options) {
  DemandSearch out;
  if (!(target_kw >= 0.0)) throw std::invalid_argument("target size must be >= 0");
  if (target_kw == 0.0) {
    out.reached = true;
    return out;
  }
  // Returns the optimal size, or nullopt when the demand cannot be met.
  auto size_at = [&](double annual_kg) -> std::optional<double> {
    auto c = cfg;
    c.annual_demand_kg = annual_kg;
    ++out.solves;
    const auto run = run_scenario(c, params, backend, options);
    if (!run.solution) return std::nullopt;
    return run.solution->sizes.electrolyser_kw;
  };
  auto close = [&](double size) {
    return std::abs(size - target_kw) <= kDemandSearchTolerance * target_kw;
  };

  // Full-load demand of an electrolyser of the target size brackets from below
  // whenever storage and supply allow full-load operation; expand upward.
  double lo = 0.0;
  double hi = target_kw / params.plant.eps_total_nom * kHoursPerYear *
              (1.0 - params.plant.f_loss_comp);
  double hi_size = 0.0;
  for (int i = 0;; ++i) {
    const auto s = size_at(hi);
    if (!s) {
      break;  // infeasible: the bracket top is beyond the available energy
    }
    hi_size = *s;
    if (close(hi_size)) {
      out.reached = true;
      out.annual_kg = hi;
      out.electrolyser_kw = hi_size;
      return out;
    }
    if (hi_size > target_kw) break;
    lo = hi;
    if (i >= 30) {
      out.message = "electrolyser size does not grow with demand";
      return out;
    }
    hi *= 2.0;
  }

  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto s = size_at(mid);
    if (!s) {
      hi = mid;
      continue;
    }
    if (close(*s)) {
      out.reached = true;
      out.annual_kg = mid;
      out.electrolyser_kw = *s;
      return out;
    }
    if (*s < target_kw) lo = mid;
    else hi = mid;
    out.annual_kg = mid;
    out.electrolyser_kw = *s;
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
  }
  out.message = "target size not reachable within the available energy";
  return out;
}

}  // namespace h2rd
