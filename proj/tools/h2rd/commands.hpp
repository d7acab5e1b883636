#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2rd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInfeasible = 2,
  kExitLimit = 3,
  kExitUsage = 64,
  kExitData = 65,
};

/// Bad command-line usage detected after parsing (exit 64).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string backend;  ///< empty: environment or default
  double time_limit_s = 0.0;  ///< 0: none
};

struct ReconstructArgs {
  std::filesystem::path feedin_dir;
  std::optional<std::filesystem::path> transmission;
  std::optional<std::filesystem::path> distribution;
  std::filesystem::path mapping;
  std::optional<long long> horizon_steps;
  std::filesystem::path out;
};

struct SolveArgs {
  std::filesystem::path scenario;
  std::filesystem::path out;
  std::optional<std::filesystem::path> dump_lp;
  std::optional<std::string> kind;
  std::optional<std::string> storage;
  std::optional<double> demand_kg;
  std::optional<double> rd_price;
  std::optional<int> horizon;
};

struct SweepArgs {
  std::filesystem::path sweep;
  std::filesystem::path out;
  unsigned jobs = 1;
};

struct PpaPriceArgs {
  std::optional<std::filesystem::path> file;
  std::optional<double> capex, opex_fix, opex_var, annual_production, wacc;
  std::optional<int> lifetime_years;
};

struct DumpLpArgs {
  std::filesystem::path scenario;
  std::filesystem::path out;
};

int cmd_reconstruct(const ReconstructArgs& a);
int cmd_solve(const SolveArgs& a, const Common& c);
int cmd_sweep(const SweepArgs& a, const Common& c);
int cmd_ppa_price(const PpaPriceArgs& a);
int cmd_stats(const std::vector<std::filesystem::path>& files);
int cmd_dump_lp(const DumpLpArgs& a);

}  // namespace h2rd::cli
