#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "h2rd/lp_problem.hpp"

namespace h2rd {

enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit, Error };

std::string_view to_string(SolveStatus s);

struct SolveOptions {
  /// Primal and dual feasibility tolerance handed to the backend.
  double tolerance = 1e-7;
  double time_limit_s = kInf;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Error;
  double objective = 0.0;
  /// Present iff status is Optimal.
  std::vector<double> primal;
  long iterations = 0;
  double wall_seconds = 0.0;
  std::string backend;
  std::string message;

  bool optimal() const noexcept { return status == SolveStatus::Optimal; }
};

class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string name() const = 0;
  /// Identity string including the engine version, for run manifests.
  virtual std::string identity() const = 0;
  virtual SolveResult solve(const LpProblem& problem, const SolveOptions& options) const = 0;
};

/// Environment variable consulted when no backend name is given.
inline constexpr const char* kBackendEnvVar = "H2RD_LP_BACKEND";

/// Creates a backend by name ("highs"). An empty name reads kBackendEnvVar and
/// falls back to "highs". Throws h2rd::Error for unknown names.
std::unique_ptr<LpBackend> make_backend(std::string_view name = {});
std::vector<std::string> available_backends();

SolveResult solve(const LpProblem& problem, const SolveOptions& options = {});

struct ResidualReport {
  double max_equality_residual = 0.0;
  double max_inequality_violation = 0.0;
  double max_bound_violation = 0.0;
  /// Row residuals divided by max(1, row scale), where the row scale is the
  /// largest of |rhs| and |a_ij x_j| over the row.
  double max_scaled_row_residual = 0.0;
  int worst_row = -1;

  bool feasible(double tol) const {
    return max_scaled_row_residual <= tol && max_bound_violation <= tol;
  }
};

/// Throws std::invalid_argument when the vector length does not match.
ResidualReport validate_solution(const LpProblem& problem, std::span<const double> x);

}  // namespace h2rd
