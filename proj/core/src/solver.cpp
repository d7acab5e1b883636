#include "h2rd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "h2rd/error.hpp"

namespace h2rd {

std::unique_ptr<LpBackend> make_highs_backend();

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Limit: return "limit";
    case SolveStatus::Error: return "error";
  }
  return "error";
}

std::vector<std::string> available_backends() { return {"highs"}; }

std::unique_ptr<LpBackend> make_backend(std::string_view name) {
  std::string chosen(name);
  if (chosen.empty()) {
    const char* env = std::getenv(kBackendEnvVar);
    chosen = env && *env ? env : "highs";
  }
  if (chosen == "highs") return make_highs_backend();
  throw Error("unknown LP backend '" + chosen + "'");
}

SolveResult solve(const LpProblem& problem, const SolveOptions& options) {
  return make_backend()->solve(problem, options);
}

ResidualReport validate_solution(const LpProblem& problem, std::span<const double> x) {
  if (x.size() != problem.num_vars())
    throw std::invalid_argument("validate_solution: vector length mismatch");
  ResidualReport rep;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& v = problem.variable(static_cast<int>(j));
    const double viol = std::max({0.0, v.lower - x[j], x[j] - v.upper});
    rep.max_bound_violation = std::max(rep.max_bound_violation, viol);
  }
  for (std::size_t i = 0; i < problem.num_rows(); ++i) {
    const int row = static_cast<int>(i);
    const auto& r = problem.row(row);
    const auto cols = problem.row_columns(row);
    const auto vals = problem.row_values(row);
    double activity = 0.0;
    double scale = std::abs(r.rhs);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double term = vals[k] * x[static_cast<std::size_t>(cols[k])];
      activity += term;
      scale = std::max(scale, std::abs(term));
    }
    double residual = 0.0;
    if (r.sense == RowSense::Equal) {
      residual = std::abs(activity - r.rhs);
      rep.max_equality_residual = std::max(rep.max_equality_residual, residual);
    } else {
      residual = std::max(0.0, activity - r.rhs);
      rep.max_inequality_violation = std::max(rep.max_inequality_violation, residual);
    }
    const double scaled = residual / std::max(1.0, scale);
    if (scaled > rep.max_scaled_row_residual) {
      rep.max_scaled_row_residual = scaled;
      rep.worst_row = row;
    }
  }
  return rep;
}

}  // namespace h2rd
