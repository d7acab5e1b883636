#include "h2rd/lp_problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace h2rd {

int LpProblem::add_variable(std::string symbol, std::optional<int> step, double cost,
                            double lower, double upper) {
  if (!std::isfinite(cost)) throw std::invalid_argument("objective coefficient not finite");
  if (std::isnan(lower) || std::isnan(upper) || lower > upper)
    throw std::invalid_argument("invalid bounds for " + symbol);
  vars_.push_back({std::move(symbol), step, cost, lower, upper});
  return static_cast<int>(vars_.size() - 1);
}

int LpProblem::add_row(std::string family, std::optional<int> step, RowSense sense,
                       double rhs, std::vector<LpTerm> terms) {
  if (!std::isfinite(rhs)) throw std::invalid_argument("row rhs not finite: " + family);
  std::sort(terms.begin(), terms.end(),
            [](const LpTerm& a, const LpTerm& b) { return a.first < b.first; });
  const auto first = cols_.size();
  for (const auto& [col, coef] : terms) {
    if (col < 0 || static_cast<std::size_t>(col) >= vars_.size())
      throw std::invalid_argument("row " + family + " references unknown variable");
    if (!std::isfinite(coef))
      throw std::invalid_argument("row " + family + " has a non-finite coefficient");
    if (cols_.size() > first && cols_.back() == col) {
      values_.back() += coef;
    } else {
      cols_.push_back(col);
      values_.push_back(coef);
    }
  }
  // Drop entries that cancelled or were zero to begin with.
  std::size_t w = first;
  for (std::size_t r = first; r < cols_.size(); ++r) {
    if (values_[r] == 0.0) continue;
    cols_[w] = cols_[r];
    values_[w] = values_[r];
    ++w;
  }
  cols_.resize(w);
  values_.resize(w);
  rows_.push_back({std::move(family), step, sense, rhs});
  starts_.push_back(cols_.size());
  return static_cast<int>(rows_.size() - 1);
}

void LpProblem::set_bounds(int var, double lower, double upper) {
  auto& v = vars_.at(static_cast<std::size_t>(var));
  if (std::isnan(lower) || std::isnan(upper) || lower > upper)
    throw std::invalid_argument("invalid bounds for " + v.symbol);
  v.lower = lower;
  v.upper = upper;
}

void LpProblem::set_cost(int var, double cost) {
  if (!std::isfinite(cost)) throw std::invalid_argument("objective coefficient not finite");
  vars_.at(static_cast<std::size_t>(var)).cost = cost;
}

std::span<const int> LpProblem::row_columns(int i) const {
  const auto r = static_cast<std::size_t>(i);
  return std::span<const int>(cols_).subspan(starts_.at(r), starts_.at(r + 1) - starts_[r]);
}

std::span<const double> LpProblem::row_values(int i) const {
  const auto r = static_cast<std::size_t>(i);
  return std::span<const double>(values_).subspan(starts_.at(r),
                                                  starts_.at(r + 1) - starts_[r]);
}

std::string LpProblem::variable_name(int j) const {
  const auto& v = variable(j);
  return v.step ? v.symbol + "[" + std::to_string(*v.step) + "]" : v.symbol;
}

std::string LpProblem::row_name(int i) const {
  const auto& r = row(i);
  return r.step ? r.family + "[" + std::to_string(*r.step) + "]" : r.family;
}

double LpProblem::objective_value(std::span<const double> x) const {
  if (x.size() != vars_.size()) throw std::invalid_argument("vector length mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < vars_.size(); ++j) sum += vars_[j].cost * x[j];
  return sum;
}

double LpProblem::row_activity(int i, std::span<const double> x) const {
  const auto cols = row_columns(i);
  const auto vals = row_values(i);
  double sum = 0.0;
  for (std::size_t k = 0; k < cols.size(); ++k)
    sum += vals[k] * x[static_cast<std::size_t>(cols[k])];
  return sum;
}

std::vector<std::pair<std::string, std::size_t>> LpProblem::row_family_counts() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& r : rows_) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& p) { return p.first == r.family; });
    if (it == out.end()) out.emplace_back(r.family, 1);
    else ++it->second;
  }
  return out;
}

}  // namespace h2rd
