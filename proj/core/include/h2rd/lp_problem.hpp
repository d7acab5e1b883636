#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace h2rd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { LessEqual, Equal };

struct LpVariable {
  std::string symbol;
  std::optional<int> step;  ///< time step for per-step variables
  double cost = 0.0;
  double lower = 0.0;
  double upper = kInf;
};

struct LpRow {
  std::string family;  ///< constraint family, e.g. "bus_balance"
  std::optional<int> step;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

using LpTerm = std::pair<int, double>;

/// Minimization LP in row-major sparse form. Rows are either `a x <= b` or
/// `a x = b`; every variable carries its own bounds (default [0, inf)).
class LpProblem {
 public:
  int add_variable(std::string symbol, std::optional<int> step, double cost,
                   double lower = 0.0, double upper = kInf);

  /// Duplicate variable ids are merged and exact zeros dropped. Throws
  /// std::invalid_argument for unknown ids or non-finite coefficients.
  int add_row(std::string family, std::optional<int> step, RowSense sense, double rhs,
              std::vector<LpTerm> terms);

  void set_bounds(int var, double lower, double upper);
  void set_cost(int var, double cost);

  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_nonzeros() const noexcept { return values_.size(); }

  const LpVariable& variable(int j) const { return vars_.at(static_cast<std::size_t>(j)); }
  const LpRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  std::span<const LpVariable> variables() const noexcept { return vars_; }
  std::span<const LpRow> rows() const noexcept { return rows_; }

  /// Column ids and coefficients of row i, sorted by column.
  std::span<const int> row_columns(int i) const;
  std::span<const double> row_values(int i) const;
  std::span<const std::size_t> row_starts() const noexcept { return starts_; }
  std::span<const int> columns() const noexcept { return cols_; }
  std::span<const double> values() const noexcept { return values_; }

  /// "symbol[step]" or "symbol" for scalars.
  std::string variable_name(int j) const;
  std::string row_name(int i) const;

  double objective_value(std::span<const double> x) const;
  double row_activity(int i, std::span<const double> x) const;

  /// Number of rows per family, in first-appearance order.
  std::vector<std::pair<std::string, std::size_t>> row_family_counts() const;

 private:
  std::vector<LpVariable> vars_;
  std::vector<LpRow> rows_;
  std::vector<std::size_t> starts_{0};
  std::vector<int> cols_;
  std::vector<double> values_;
};

}  // namespace h2rd
