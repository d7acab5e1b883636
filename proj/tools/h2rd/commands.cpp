#include "commands.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "h2rd/analysis.hpp"
#include "h2rd/csv_io.hpp"
#include "h2rd/econ.hpp"
#include "h2rd/error.hpp"
#include "h2rd/mps_writer.hpp"
#include "h2rd/pipeline.hpp"
#include "h2rd/scenario_file.hpp"
#include "h2rd/solver.hpp"
#include "h2rd/sweep.hpp"
#include "h2rd/text_format.hpp"
#include "manifest.hpp"

namespace h2rd::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::unique_ptr<LpBackend> backend_for(const Common& c) {
  try {
    return make_backend(c.backend);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  if (c.time_limit_s > 0.0) o.time_limit_s = c.time_limit_s;
  return o;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(); }

json prices_json(const Prices& p) {
  return {{"rd", p.rd},
          {"grid", p.grid},
          {"ppa_wind_off", p.ppa_wind_off},
          {"ppa_wind_on", p.ppa_wind_on},
          {"ppa_pv", p.ppa_pv}};
}

json config_json(const ScenarioConfig& c, const ParameterSet& params) {
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["storage"] = std::string(to_string(c.storage));
  j["prices"] = prices_json(c.prices);
  j["annual_demand_kg"] = c.annual_demand_kg;
  j["horizon_steps"] = c.horizon_steps;
  j["month_block_steps"] = c.month_block();
  j["parameters_yaml"] = parameters_to_yaml(params);
  return j;
}

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Infeasible: return kExitInfeasible;
    case SolveStatus::Limit: return kExitLimit;
    default: return kExitFailure;
  }
}

json solution_json(const ScenarioProblem& sp, const SolveResult& res,
                   const std::optional<Solution>& sol) {
  json j;
  j["status"] = std::string(to_string(res.status));
  j["backend"] = res.backend;
  j["iterations"] = res.iterations;
  j["solve_seconds"] = res.wall_seconds;
  if (!sol) {
    j["message"] = res.message;
    return j;
  }
  j["objective_eur_a"] = sol->objective;
  const auto& z = sol->sizes;
  j["sizes"] = {{"p_nom_ely_kw", z.electrolyser_kw},  {"p_nom_stack_kw", z.stack_kw},
                {"p_nom_peri_kw", z.peripherals_kw},  {"p_nom_comp_kw", z.compressor_kw},
                {"p_nom_wind_off_kw", z.wind_off_kw}, {"p_nom_wind_on_kw", z.wind_on_kw},
                {"p_nom_pv_kw", z.pv_kw},             {"m_nom_sto_kg", z.storage_kg}};
  json costs;
  for (const auto& [name, v] : sol->costs.items()) costs[std::string(name)] = v;
  j["costs_eur_a"] = costs;
  if (sol->annual_demand_kg > 0.0) {
    const auto b = ohsc(*sol);
    j["ohsc_eur_kg"] = b.ohsc;
    json parts;
    for (const auto& [name, v] : b.contributions) parts[std::string(name)] = v;
    j["ohsc_contributions_eur_kg"] = parts;
  } else {
    j["ohsc_eur_kg"] = json();
  }
  auto metric = [](auto&& f) -> json {
    try {
      return num(f());
    } catch (const std::invalid_argument&) {
      return json();
    }
  };
  j["s_ppa"] = metric([&] { return power_shares(*sol).ppa; });
  j["s_rd"] = metric([&] { return power_shares(*sol).rd; });
  j["s_grid"] = metric([&] { return power_shares(*sol).grid; });
  j["rd_used_share"] = metric([&] { return rd_usage_share(*sol); });
  j["rd_flh"] = metric([&] { return rd_utilization(*sol); });
  const auto residuals = validate_solution(sp.lp, res.primal);
  j["max_scaled_row_residual"] = residuals.max_scaled_row_residual;
  json dispatch;
  for (int v = 0; v < kStepVarCount; ++v)
    dispatch[std::string(symbol(static_cast<StepVar>(v)))] =
        sol->dispatch[static_cast<StepVar>(v)];
  j["dispatch"] = dispatch;
  return j;
}

std::string ohsc_report(const Solution& sol) {
  std::ostringstream out;
  out << "scenario  " << to_string(sol.kind) << '\n';
  out << "storage   " << to_string(sol.storage) << '\n';
  out << "objective " << format_fixed(sol.objective, 2) << " EUR/a\n";
  if (sol.annual_demand_kg > 0.0) {
    const auto b = ohsc(sol);
    out << "ohsc      " << format_fixed(b.ohsc, 4) << " EUR/kg\n";
    for (const auto& [name, v] : b.contributions)
      out << "  " << name << std::string(14 - name.size(), ' ') << format_fixed(v, 4) << '\n';
  } else {
    out << "ohsc      n/a (zero demand)\n";
  }
  return out.str();
}

ScenarioFile load_with_overrides(const SolveArgs& a) {
  auto f = load_scenario_file(a.scenario);
  auto& c = f.config;
  try {
    if (a.kind) c.kind = parse_scenario_kind(*a.kind);
    if (a.storage) c.storage = parse_storage_option(*a.storage);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.demand_kg) c.annual_demand_kg = *a.demand_kg;
  if (a.rd_price) c.prices.rd = *a.rd_price;
  if (a.horizon) {
    c.horizon_steps = *a.horizon;
    for (auto* s : {&c.inputs.cf_wind_off, &c.inputs.cf_wind_on, &c.inputs.cf_pv,
                    &c.inputs.rd_available})
      if (*s && (*s)->size() > static_cast<std::size_t>(*a.horizon)) {
        auto v = (*s)->values().first(static_cast<std::size_t>(*a.horizon));
        *s = TimeSeries((*s)->resolution(), std::vector<double>(v.begin(), v.end()));
      }
  }
  c.validate();
  return f;
}

}  // namespace

int cmd_reconstruct(const ReconstructArgs& a) {
  const auto t0 = Clock::now();
  RunManifest manifest;
  manifest.command = "reconstruct";

  ReconstructionInputs in;
  std::vector<fs::path> feed_files;
  for (const auto& e : fs::directory_iterator(a.feedin_dir))
    if (e.is_regular_file() && e.path().extension() == ".csv") feed_files.push_back(e.path());
  std::sort(feed_files.begin(), feed_files.end());
  for (const auto& p : feed_files) {
    in.feedin.emplace(p.stem().string(), read_series_csv(p));
    manifest.inputs["feedin/" + p.filename().string()] = p;
  }
  if (a.transmission) {
    auto m = read_transmission_log(*a.transmission);
    in.measures.insert(in.measures.end(), m.begin(), m.end());
    manifest.inputs["transmission"] = *a.transmission;
  }
  if (a.distribution) {
    auto m = read_distribution_log(*a.distribution);
    in.measures.insert(in.measures.end(), m.begin(), m.end());
    manifest.inputs["distribution"] = *a.distribution;
  }
  in.mapping = read_region_mapping(a.mapping);
  manifest.inputs["mapping"] = a.mapping;
  if (a.horizon_steps) in.horizon_quarter = *a.horizon_steps;

  const auto res = reconstruct(in);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';

  ensure_dir(a.out / "stations");
  ensure_dir(a.out / "regions");
  for (const auto& [station, s] : res.stations) {
    const auto p = a.out / "stations" / (station + ".csv");
    write_series_csv(p, s);
    manifest.outputs.push_back(fs::path("stations") / p.filename());
  }
  for (const auto& [region, s] : res.regions) {
    const auto p = a.out / "regions" / (region + ".csv");
    write_series_csv(p, s);
    manifest.outputs.push_back(fs::path("regions") / p.filename());
  }

  auto out = open_out(a.out / "stats.csv");
  out << "kind,id,region,measures,hours_with_measure,energy_kwh,eq_full_load_hours,"
         "declared_kwh,coverage,shortfall\n";
  for (const auto& r : res.reports) {
    out << "station," << r.station << ',' << r.region.value_or("") << ',' << r.measures << ','
        << r.stats.hours_with_measure << ',' << format_shortest(r.stats.energy_kwh) << ','
        << format_shortest(r.stats.eq_full_load_hours) << ',';
    if (r.declared_kwh) {
      out << format_shortest(*r.declared_kwh) << ',';
      if (*r.declared_kwh > 0.0) out << format_shortest(r.targeted_kwh / *r.declared_kwh);
    } else {
      out << ',';
    }
    out << ',' << (r.shortfall ? "yes" : "no") << '\n';
  }
  for (const auto& [region, s] : res.regions) {
    const auto st = series_stats(s);
    out << "region," << region << ',' << region << ",," << st.hours_with_measure << ','
        << format_shortest(st.energy_kwh) << ',' << format_shortest(st.eq_full_load_hours)
        << ",,,\n";
  }
  manifest.outputs.push_back("stats.csv");
  manifest.config = {{"horizon_quarter_steps", res.horizon_quarter},
                     {"stations", res.stations.size()},
                     {"regions", res.regions.size()}};
  manifest.wall_seconds = seconds_since(t0);
  manifest.write(a.out);
  std::cout << "reconstructed " << res.stations.size() << " stations, " << res.regions.size()
            << " regions over " << res.horizon_quarter / 4 << " h\n";
  return kExitOk;
}

int cmd_solve(const SolveArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto backend = backend_for(c);
  const auto file = load_with_overrides(a);
  const auto sp = build_problem(file.config, file.params);
  ensure_dir(a.out);

  RunManifest manifest;
  manifest.command = "solve";
  manifest.backend = backend->identity();
  manifest.inputs = file.sources;
  manifest.config = config_json(file.config, file.params);

  if (a.dump_lp) write_mps(sp.lp, *a.dump_lp);

  const auto res = backend->solve(sp.lp, solve_options(c));
  std::optional<Solution> sol;
  if (res.optimal()) sol = decode_solution(sp, res);

  auto out = open_out(a.out / "solution.json");
  out << solution_json(sp, res, sol).dump(2) << '\n';
  manifest.outputs.push_back("solution.json");
  if (sol) {
    const auto report = ohsc_report(*sol);
    open_out(a.out / "ohsc.txt") << report;
    manifest.outputs.push_back("ohsc.txt");
    std::cout << report;
  } else {
    std::cerr << "solve ended with status " << to_string(res.status)
              << (res.message.empty() ? "" : ": " + res.message) << '\n';
  }
  manifest.wall_seconds = seconds_since(t0);
  manifest.write(a.out);
  return exit_for(res.status);
}

int cmd_sweep(const SweepArgs& a, const Common& c) {
  const auto t0 = Clock::now();
  const auto backend = backend_for(c);
  const auto file = load_sweep_file(a.sweep);
  const auto records = run_sweep(file.grid, file.params, *backend, a.jobs, solve_options(c));
  ensure_dir(a.out);

  RunManifest manifest;
  manifest.command = "sweep";
  manifest.backend = backend->identity();
  manifest.inputs = file.sources;
  const auto& g = file.grid;
  json cfg;
  cfg["horizon_steps"] = g.horizon_steps;
  cfg["month_block_steps"] = g.month_block_steps ? json(*g.month_block_steps) : json();
  cfg["prices"] = prices_json(g.prices);
  cfg["points"] = records.size();
  cfg["parameters_yaml"] = parameters_to_yaml(file.params);
  manifest.config = cfg;

  {
    auto out = open_out(a.out / "sweep.csv");
    write_sweep_csv(out, records);
  }
  {
    auto out = open_out(a.out / "sweep.json");
    write_sweep_json(out, records);
  }
  manifest.outputs = {"sweep.csv", "sweep.json"};
  ensure_dir(a.out / "plot");
  for (const auto& p : write_plot_data(a.out / "plot", records))
    manifest.outputs.push_back(fs::path("plot") / p.filename());
  manifest.wall_seconds = seconds_since(t0);
  manifest.write(a.out);

  std::size_t failed = 0;
  for (const auto& r : records) failed += r.status != "optimal";
  std::cout << records.size() << " points, " << failed << " not optimal\n";
  return kExitOk;
}

int cmd_ppa_price(const PpaPriceArgs& a) {
  PpaCostInputs in = ParameterSet{}.wind_offshore_cost;
  if (a.file) {
    std::ifstream f(*a.file);
    std::ostringstream text;
    text << f.rdbuf();
    YAML::Node root;
    try {
      root = YAML::Load(text.str());
    } catch (const YAML::Exception& e) {
      throw DataError(a.file->string(), static_cast<std::size_t>(e.mark.line + 1), e.msg);
    }
    if (!root.IsMap()) throw DataError(a.file->string(), 0, "expected a mapping");
    auto req = [&](const char* key, auto& dst) {
      const auto n = root[key];
      if (!n) throw DataError(a.file->string(), 0, std::string("missing field '") + key + "'");
      try {
        dst = n.as<std::decay_t<decltype(dst)>>();
      } catch (const YAML::Exception&) {
        throw DataError(a.file->string(), static_cast<std::size_t>(n.Mark().line + 1),
                        std::string("invalid value for '") + key + "'");
      }
    };
    req("capex", in.capex);
    req("opex_fix", in.opex_fix);
    req("opex_var", in.opex_var);
    req("lifetime_years", in.lifetime_years);
    req("annual_production", in.annual_production);
    req("wacc", in.wacc);
  }
  if (a.capex) in.capex = *a.capex;
  if (a.opex_fix) in.opex_fix = *a.opex_fix;
  if (a.opex_var) in.opex_var = *a.opex_var;
  if (a.lifetime_years) in.lifetime_years = *a.lifetime_years;
  if (a.annual_production) in.annual_production = *a.annual_production;
  if (a.wacc) in.wacc = *a.wacc;
  std::cout << format_fixed(ppa_price_cost_based(in), 4) << '\n';
  return kExitOk;
}

int cmd_stats(const std::vector<fs::path>& files) {
  std::cout << "file,hours_with_measure,energy_kwh,eq_full_load_hours\n";
  for (const auto& p : files) {
    auto s = read_series_csv(p);
    if (s.resolution() == Resolution::Quarter) s = resample_to_hour(s);
    const auto st = series_stats(s);
    std::cout << p.string() << ',' << st.hours_with_measure << ','
              << format_shortest(st.energy_kwh) << ',' << format_shortest(st.eq_full_load_hours)
              << '\n';
  }
  return kExitOk;
}

int cmd_dump_lp(const DumpLpArgs& a) {
  const auto file = load_scenario_file(a.scenario);
  const auto sp = build_problem(file.config, file.params);
  write_mps(sp.lp, a.out);
  std::cout << sp.lp.num_vars() << " columns, " << sp.lp.num_rows() << " rows, "
            << sp.lp.num_nonzeros() << " nonzeros\n";
  for (const auto& [family, n] : sp.lp.row_family_counts())
    std::cout << "  " << family << ' ' << n << '\n';
  return kExitOk;
}

}  // namespace h2rd::cli
