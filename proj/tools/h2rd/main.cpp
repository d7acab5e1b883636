#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "h2rd/error.hpp"
#include "h2rd/solver.hpp"

using namespace h2rd::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hydrogen supply cost optimisation with regional redispatch power"};
  app.set_version_flag("--version", H2RD_VERSION);
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + h2rd::kBackendEnvVar +
             " selects the LP backend (default: highs).");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--backend", common.backend, "LP backend name");
    sub->add_option("--time-limit", common.time_limit_s, "Solver time limit in seconds")
        ->check(CLI::NonNegativeNumber);
  };

  ReconstructArgs rec;
  auto* r = app.add_subcommand("reconstruct", "Rebuild hourly redispatch series from measure logs");
  r->add_option("--feedin", rec.feedin_dir, "Directory of <station>.csv feed-in series")
      ->required()->check(CLI::ExistingDirectory);
  r->add_option("--transmission", rec.transmission, "Transmission measure log")
      ->check(CLI::ExistingFile);
  r->add_option("--distribution", rec.distribution, "Distribution measure log")
      ->check(CLI::ExistingFile);
  r->add_option("--mapping", rec.mapping, "Station to region mapping")
      ->required()->check(CLI::ExistingFile);
  r->add_option("--horizon-steps", rec.horizon_steps, "Horizon in 15-min steps");
  r->add_option("--out", rec.out, "Output directory")->required();

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "Solve one scenario");
  s->add_option("scenario", sol.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  s->add_option("--out", sol.out, "Output directory")->required();
  s->add_option("--dump-lp", sol.dump_lp, "Also write the LP as MPS");
  s->add_option("--kind", sol.kind, "Override scenario kind");
  s->add_option("--storage", sol.storage, "Override storage option");
  s->add_option("--demand", sol.demand_kg, "Override annual demand in kg");
  s->add_option("--rd-price", sol.rd_price, "Override redispatch price in EUR/kWh");
  s->add_option("--horizon", sol.horizon, "Override horizon in hourly steps");
  add_common(s);

  SweepArgs sw;
  auto* w = app.add_subcommand("sweep", "Solve a parameter grid");
  w->add_option("sweep", sw.sweep, "Sweep file")->required()->check(CLI::ExistingFile);
  w->add_option("--out", sw.out, "Output directory")->required();
  w->add_option("--jobs,-j", sw.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(w);

  PpaPriceArgs ppa;
  auto* p = app.add_subcommand("ppa-price", "Cost-based PPA price in EUR/kWh");
  p->add_option("file", ppa.file, "YAML block with all cost inputs")->check(CLI::ExistingFile);
  p->add_option("--capex", ppa.capex);
  p->add_option("--opex-fix", ppa.opex_fix);
  p->add_option("--opex-var", ppa.opex_var);
  p->add_option("--lifetime", ppa.lifetime_years);
  p->add_option("--production", ppa.annual_production, "kWh per kW and year");
  p->add_option("--wacc", ppa.wacc);

  std::vector<std::filesystem::path> stat_files;
  auto* st = app.add_subcommand("stats", "Descriptive statistics of series files");
  st->add_option("files", stat_files)->required()->check(CLI::ExistingFile);

  DumpLpArgs dump;
  auto* d = app.add_subcommand("dump-lp", "Write a scenario's LP as MPS");
  d->add_option("scenario", dump.scenario)->required()->check(CLI::ExistingFile);
  d->add_option("--out,-o", dump.out, "MPS file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*r) return cmd_reconstruct(rec);
    if (*s) return cmd_solve(sol, common);
    if (*w) return cmd_sweep(sw, common);
    if (*p) return cmd_ppa_price(ppa);
    if (*st) return cmd_stats(stat_files);
    if (*d) return cmd_dump_lp(dump);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const h2rd::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
