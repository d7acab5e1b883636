#include <Highs.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "h2rd/solver.hpp"

namespace h2rd {
namespace {

HighsLp to_highs(const LpProblem& p) {
  HighsLp lp;
  lp.num_col_ = static_cast<HighsInt>(p.num_vars());
  lp.num_row_ = static_cast<HighsInt>(p.num_rows());
  lp.sense_ = ObjSense::kMinimize;
  lp.col_cost_.reserve(p.num_vars());
  for (const auto& v : p.variables()) {
    lp.col_cost_.push_back(v.cost);
    lp.col_lower_.push_back(v.lower);
    lp.col_upper_.push_back(v.upper);
  }
  for (const auto& r : p.rows()) {
    lp.row_lower_.push_back(r.sense == RowSense::Equal ? r.rhs : -kHighsInf);
    lp.row_upper_.push_back(r.rhs);
  }
  auto& m = lp.a_matrix_;
  m.format_ = MatrixFormat::kRowwise;
  m.num_col_ = lp.num_col_;
  m.num_row_ = lp.num_row_;
  m.start_.assign(p.row_starts().begin(), p.row_starts().end());
  m.index_.assign(p.columns().begin(), p.columns().end());
  m.value_.assign(p.values().begin(), p.values().end());
  return lp;
}

SolveStatus map_status(HighsModelStatus s) {
  switch (s) {
    case HighsModelStatus::kOptimal:
    case HighsModelStatus::kModelEmpty: return SolveStatus::Optimal;
    case HighsModelStatus::kInfeasible: return SolveStatus::Infeasible;
    case HighsModelStatus::kUnbounded: return SolveStatus::Unbounded;
    case HighsModelStatus::kTimeLimit:
    case HighsModelStatus::kIterationLimit:
    case HighsModelStatus::kSolutionLimit:
    case HighsModelStatus::kInterrupt: return SolveStatus::Limit;
    default: return SolveStatus::Error;
  }
}

class HighsBackend final : public LpBackend {
 public:
  std::string name() const override { return "highs"; }
  std::string identity() const override { return std::string("HiGHS ") + highsVersion(); }

  SolveResult solve(const LpProblem& problem, const SolveOptions& options) const override {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult out;
    out.backend = identity();

    Highs h;
    h.setOptionValue("output_flag", false);
    h.setOptionValue("primal_feasibility_tolerance", options.tolerance);
    h.setOptionValue("dual_feasibility_tolerance", options.tolerance);
    h.setOptionValue("random_seed", 0);
    if (std::isfinite(options.time_limit_s))
      h.setOptionValue("time_limit", options.time_limit_s);

    if (h.passModel(to_highs(problem)) == HighsStatus::kError) {
      out.message = "HiGHS rejected the model";
      return out;
    }
    h.run();
    auto status = h.getModelStatus();
    if (status == HighsModelStatus::kUnboundedOrInfeasible) {
      // Presolve could not tell the two apart; the plain simplex can.
      h.setOptionValue("presolve", "off");
      h.run();
      status = h.getModelStatus();
      if (status == HighsModelStatus::kUnboundedOrInfeasible) status = HighsModelStatus::kInfeasible;
    }
    out.status = map_status(status);
    out.message = h.modelStatusToString(status);
    const auto& info = h.getInfo();
    out.iterations = static_cast<long>(info.simplex_iteration_count) +
                     static_cast<long>(std::max<HighsInt>(0, info.ipm_iteration_count));
    if (out.status == SolveStatus::Optimal) {
      out.objective = info.objective_function_value;
      out.primal = h.getSolution().col_value;
      out.primal.resize(problem.num_vars(), 0.0);
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
};

}  // namespace

std::unique_ptr<LpBackend> make_highs_backend() { return std::make_unique<HighsBackend>(); }

}  // namespace h2rd
