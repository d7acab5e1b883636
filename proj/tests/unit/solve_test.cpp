#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "h2rd/error.hpp"
#include "h2rd/mps_writer.hpp"
#include "h2rd/params.hpp"
#include "h2rd/scenario.hpp"
#include "h2rd/solver.hpp"
#include "oracles.hpp"

using namespace h2rd;

TEST(LpProblem, MergesDuplicatesAndDropsZeros) {
  LpProblem p;
  const int x = p.add_variable("x", std::nullopt, 1.0);
  const int y = p.add_variable("y", 3, 2.0);
  p.add_row("r", 0, RowSense::LessEqual, 5.0, {{y, 1.0}, {x, 2.0}, {x, 1.0}, {y, -1.0}});
  ASSERT_EQ(p.num_nonzeros(), 1u);
  EXPECT_EQ(p.row_columns(0)[0], x);
  EXPECT_DOUBLE_EQ(p.row_values(0)[0], 3.0);
  EXPECT_EQ(p.variable_name(y), "y[3]");
  EXPECT_EQ(p.row_name(0), "r[0]");
  EXPECT_THROW(p.add_row("bad", std::nullopt, RowSense::Equal, 0.0, {{7, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(p.add_row("bad", std::nullopt, RowSense::Equal, 0.0, {{x, kInf}}),
               std::invalid_argument);
}

TEST(Solve, LowerBoundedMinimum) {
  LpProblem p;
  const int x = p.add_variable("x", std::nullopt, 1.0);
  p.add_row("floor", std::nullopt, RowSense::LessEqual, -3.0, {{x, -1.0}});
  const auto r = solve(p);
  ASSERT_TRUE(r.optimal());
  ASSERT_EQ(r.primal.size(), 1u);
  EXPECT_NEAR(r.primal[0], 3.0, 1e-9);
  EXPECT_NEAR(r.objective, 3.0, 1e-9);
}

TEST(Solve, Infeasible) {
  LpProblem p;
  const int x = p.add_variable("x", std::nullopt, 0.0);
  p.add_row("cap", std::nullopt, RowSense::LessEqual, -1.0, {{x, 1.0}});
  const auto r = solve(p);
  EXPECT_EQ(r.status, SolveStatus::Infeasible);
  EXPECT_TRUE(r.primal.empty());
}

TEST(Solve, Unbounded) {
  LpProblem p;
  p.add_variable("x", std::nullopt, -1.0);
  const auto r = solve(p);
  EXPECT_EQ(r.status, SolveStatus::Unbounded);
  EXPECT_TRUE(r.primal.empty());
}

TEST(Solve, Deterministic) {
  LpProblem p;
  const int x = p.add_variable("x", std::nullopt, 1.0);
  const int y = p.add_variable("y", std::nullopt, 1.0);
  p.add_row("sum", std::nullopt, RowSense::Equal, 4.0, {{x, 1.0}, {y, 1.0}});
  const auto a = solve(p);
  const auto b = solve(p);
  ASSERT_TRUE(a.optimal());
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(Backend, Selection) {
  EXPECT_EQ(make_backend("highs")->name(), "highs");
  EXPECT_THROW(make_backend("nope"), Error);
  ::setenv(kBackendEnvVar, "nope", 1);
  EXPECT_THROW(make_backend(), Error);
  ::setenv(kBackendEnvVar, "highs", 1);
  EXPECT_EQ(make_backend()->name(), "highs");
  ::unsetenv(kBackendEnvVar);
  EXPECT_EQ(make_backend()->name(), "highs");
  EXPECT_FALSE(make_backend()->identity().empty());
}

TEST(ValidateSolution, ReportsPerturbation) {
  LpProblem p;
  const int x = p.add_variable("x", std::nullopt, 1.0, 0.0, 10.0);
  const int y = p.add_variable("y", std::nullopt, 1.0);
  p.add_row("eq", std::nullopt, RowSense::Equal, 4.0, {{x, 1.0}, {y, 1.0}});
  p.add_row("le", std::nullopt, RowSense::LessEqual, 3.0, {{x, 1.0}});
  const auto r = solve(p);
  ASSERT_TRUE(r.optimal());
  auto report = validate_solution(p, r.primal);
  EXPECT_TRUE(report.feasible(1e-9));

  std::vector<double> bad{3.0, 1.25};
  report = validate_solution(p, bad);
  EXPECT_NEAR(report.max_equality_residual, 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(report.max_inequality_violation, 0.0);

  bad = {3.5, 0.5};
  report = validate_solution(p, bad);
  EXPECT_NEAR(report.max_inequality_violation, 0.5, 1e-15);
  EXPECT_EQ(report.worst_row, 1);

  bad = {11.0, -2.0};
  report = validate_solution(p, bad);
  EXPECT_NEAR(report.max_bound_violation, 2.0, 1e-15);
  EXPECT_THROW(validate_solution(p, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Mps, WritesSectionsAndNames) {
  LpProblem p;
  const int x = p.add_variable("x", 0, 2.0, 0.0, 5.0);
  const int y = p.add_variable("y", std::nullopt, 0.0);
  p.add_row("cap", 0, RowSense::LessEqual, 3.0, {{x, 1.0}, {y, 1.0}});
  p.add_row("link", std::nullopt, RowSense::Equal, 0.0, {{x, 1.0}, {y, -1.0}});
  std::ostringstream out;
  write_mps(p, out, "T");
  const auto s = out.str();
  for (const char* key : {"NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA", "x[0]",
                          "cap[0]", "link", " L ", " E ", " UP "})
    EXPECT_NE(s.find(key), std::string::npos) << key;
}

TEST(BruteForce, TinyInstanceMatchesLp) {
  const ParameterSet params;
  oracle::TinyInstance inst;

  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::PpaRef;
  cfg.storage = inst.storage;
  cfg.horizon_steps = 2;
  cfg.annual_demand_kg = inst.demand_kg_h * kHoursPerYear;
  cfg.prices = params.prices;
  cfg.prices.ppa_wind_on = inst.price;
  cfg.inputs.cf_wind_on = TimeSeries(Resolution::Hour, inst.cf);
  auto problem = build_problem(cfg, params);
  const auto free_run = solve(problem.lp);
  ASSERT_TRUE(free_run.optimal());
  const double ely_free = free_run.primal[problem.layout.size(SizeVar::P_nom_Ely)];

  // Box the electrolyser so the unconstrained optimum sits strictly inside.
  inst.ely_max_kw = 1.5 * ely_free;
  const int ely = problem.layout.size(SizeVar::P_nom_Ely);
  problem.lp.set_bounds(ely, 0.0, inst.ely_max_kw);
  const auto lp = solve(problem.lp);
  ASSERT_TRUE(lp.optimal());

  // The grid only samples feasible points, so it never beats the LP, and it
  // closes in on the LP optimum as the grid is refined.
  const auto coarse = oracle::brute_force(inst, params, 100);
  const auto fine = oracle::brute_force(inst, params, 1000);
  EXPECT_GE(coarse.objective, lp.objective * (1.0 - 1e-9));
  EXPECT_GE(fine.objective, lp.objective * (1.0 - 1e-9));
  EXPECT_LE(fine.objective, coarse.objective);
  EXPECT_LE(fine.objective - lp.objective, 2e-3 * lp.objective);
  EXPECT_NEAR(fine.electrolyser_kw, lp.primal[static_cast<std::size_t>(ely)],
              0.01 * inst.ely_max_kw);
}
