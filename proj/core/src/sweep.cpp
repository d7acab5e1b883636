#include "h2rd/sweep.hpp"

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "h2rd/error.hpp"
#include "h2rd/scenario_file.hpp"
#include "h2rd/text_format.hpp"
#include "yaml_util.hpp"

namespace h2rd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
  };
  const auto threads = std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(n, 1));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

auto key_tuple(const SweepKey& k) {
  return std::tie(k.region, k.year, k.scenario, k.storage, k.annual_demand_kg, k.rd_price_ct);
}

struct Outcome {
  SolveStatus status = SolveStatus::Error;
  std::optional<Solution> solution;
  std::string message;
};

Outcome solve_point(const ScenarioConfig& cfg, const ParameterSet& params,
                    const LpBackend& backend, const SolveOptions& options) {
  Outcome out;
  try {
    auto run = run_scenario(cfg, params, backend, options);
    out.status = run.result.status;
    out.solution = std::move(run.solution);
    out.message = run.result.message;
  } catch (const std::exception& e) {
    out.status = SolveStatus::Error;
    out.message = e.what();
  }
  return out;
}

template <typename F>
double or_nan(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument&) {
    return kNaN;
  }
}

std::string num(double v) { return std::isnan(v) ? std::string() : format_shortest(v); }

}  // namespace

std::size_t SweepGrid::size() const {
  return datasets.size() * scenarios.size() * storages.size() * rd_prices_ct.size() *
         annual_demands_kg.size();
}

ScenarioKind base_kind(ScenarioKind variant) {
  return variant == ScenarioKind::FirstMoverRd ? ScenarioKind::FirstMover : ScenarioKind::PpaRef;
}

bool canonical_less(const SweepKey& a, const SweepKey& b) { return key_tuple(a) < key_tuple(b); }

std::vector<SweepRecord> run_sweep(const SweepGrid& grid, const ParameterSet& params,
                                   const LpBackend& backend, unsigned jobs,
                                   const SolveOptions& options) {
  auto datasets = grid.datasets;
  std::sort(datasets.begin(), datasets.end(), [](const Dataset& a, const Dataset& b) {
    return std::tie(a.region, a.year) < std::tie(b.region, b.year);
  });
  for (std::size_t i = 1; i < datasets.size(); ++i)
    if (datasets[i].region == datasets[i - 1].region && datasets[i].year == datasets[i - 1].year)
      throw std::invalid_argument("duplicate dataset " + datasets[i].region + "/" +
                                  std::to_string(datasets[i].year));
  const auto scenarios = sorted_unique(grid.scenarios);
  const auto storages = sorted_unique(grid.storages);
  const auto prices = sorted_unique(grid.rd_prices_ct);
  const auto demands = sorted_unique(grid.annual_demands_kg);

  auto config = [&](const Dataset& ds, ScenarioKind kind, StorageOption sto, double price_ct,
                    double demand) {
    ScenarioConfig c;
    c.kind = kind;
    c.storage = sto;
    c.prices = grid.prices;
    c.prices.rd = price_ct / 100.0;
    c.annual_demand_kg = demand;
    c.horizon_steps = grid.horizon_steps;
    c.month_block_steps = grid.month_block_steps;
    c.inputs = ds.inputs;
    return c;
  };

  // Base solves do not depend on the redispatch price; each is solved once.
  using BaseKey = std::tuple<std::size_t, ScenarioKind, StorageOption, double>;
  std::vector<BaseKey> base_keys;
  struct Point {
    std::size_t dataset;
    ScenarioKind kind;
    StorageOption storage;
    double price_ct;
    double demand;
  };
  std::vector<Point> points;
  for (std::size_t d = 0; d < datasets.size(); ++d)
    for (auto kind : scenarios)
      for (auto sto : storages)
        for (double demand : demands) {
          base_keys.emplace_back(d, base_kind(kind), sto, demand);
          for (double price : prices) points.push_back({d, kind, sto, price, demand});
        }
  base_keys = sorted_unique(base_keys);

  std::vector<Outcome> bases(base_keys.size());
  parallel_for(base_keys.size(), jobs, [&](std::size_t i) {
    const auto& [d, kind, sto, demand] = base_keys[i];
    bases[i] = solve_point(config(datasets[d], kind, sto, 0.0, demand), params, backend, options);
  });

  std::vector<SweepRecord> records(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t i) {
    const auto& p = points[i];
    const auto& ds = datasets[p.dataset];
    auto& rec = records[i];
    rec.key = {ds.region, ds.year, p.kind, p.storage, p.price_ct, p.demand};
    const auto bk = BaseKey{p.dataset, base_kind(p.kind), p.storage, p.demand};
    const auto& base =
        bases[static_cast<std::size_t>(std::lower_bound(base_keys.begin(), base_keys.end(), bk) -
                                       base_keys.begin())];
    const auto var =
        solve_point(config(ds, p.kind, p.storage, p.price_ct, p.demand), params, backend, options);

    rec.ohsc = rec.ohsc_ref = rec.reduction = rec.p_nom_ely_kw = kNaN;
    rec.s_ppa = rec.s_rd = rec.rd_used_share = rec.rd_flh = kNaN;
    rec.decomposition = {kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
    if (base.solution) rec.ohsc_ref = or_nan([&] { return ohsc(*base.solution).ohsc; });
    if (var.solution) {
      const auto& s = *var.solution;
      rec.ohsc = or_nan([&] { return ohsc(s).ohsc; });
      rec.p_nom_ely_kw = s.sizes.electrolyser_kw;
      rec.s_ppa = or_nan([&] { return power_shares(s).ppa; });
      rec.s_rd = or_nan([&] { return power_shares(s).rd; });
      rec.rd_used_share = or_nan([&] { return rd_usage_share(s); });
      rec.rd_flh = or_nan([&] { return rd_utilization(s); });
    }
    if (base.solution && var.solution) {
      rec.reduction = rec.ohsc_ref - rec.ohsc;
      try {
        rec.decomposition = decompose_reduction(*base.solution, *var.solution);
      } catch (const std::invalid_argument&) {
      }
    }
    if (!base.solution)
      rec.status = "base_" + std::string(to_string(base.status));
    else
      rec.status = std::string(to_string(var.status));
  });

  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return canonical_less(a.key, b.key);
  });
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "region,year,scenario,storage,rd_price_ct,annual_demand_kg,ohsc_eur_kg,"
         "ohsc_ref_eur_kg,reduction_eur_kg,p_nom_ely_kw,s_ppa,s_rd,rd_used_share,rd_flh,"
         "red_rd,red_ppa,red_ely,red_sto,residual,status\n";
  for (const auto& r : records) {
    const auto& k = r.key;
    const auto& d = r.decomposition;
    out << k.region << ',' << k.year << ',' << to_string(k.scenario) << ','
        << to_string(k.storage) << ',' << num(k.rd_price_ct) << ',' << num(k.annual_demand_kg)
        << ',' << num(r.ohsc) << ',' << num(r.ohsc_ref) << ',' << num(r.reduction) << ','
        << num(r.p_nom_ely_kw) << ',' << num(r.s_ppa) << ',' << num(r.s_rd) << ','
        << num(r.rd_used_share) << ',' << num(r.rd_flh) << ',' << num(d.red_rd) << ','
        << num(d.red_ppa) << ',' << num(d.red_ely) << ',' << num(d.red_sto) << ','
        << num(d.residual) << ',' << r.status << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records) {
  using json = nlohmann::ordered_json;
  auto val = [](double v) { return std::isnan(v) ? json() : json(v); };
  auto doc = json::array();
  for (const auto& r : records) {
    const auto& k = r.key;
    const auto& d = r.decomposition;
    json j;
    j["region"] = k.region;
    j["year"] = k.year;
    j["scenario"] = std::string(to_string(k.scenario));
    j["storage"] = std::string(to_string(k.storage));
    j["rd_price_ct"] = k.rd_price_ct;
    j["annual_demand_kg"] = k.annual_demand_kg;
    j["ohsc_eur_kg"] = val(r.ohsc);
    j["ohsc_ref_eur_kg"] = val(r.ohsc_ref);
    j["reduction_eur_kg"] = val(r.reduction);
    j["p_nom_ely_kw"] = val(r.p_nom_ely_kw);
    j["s_ppa"] = val(r.s_ppa);
    j["s_rd"] = val(r.s_rd);
    j["rd_used_share"] = val(r.rd_used_share);
    j["rd_flh"] = val(r.rd_flh);
    j["red_rd"] = val(d.red_rd);
    j["red_ppa"] = val(d.red_ppa);
    j["red_ely"] = val(d.red_ely);
    j["red_sto"] = val(d.red_sto);
    j["residual"] = val(d.residual);
    j["status"] = r.status;
    doc.push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

namespace {

std::string file_safe(std::string_view s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

}  // namespace

std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                   const std::vector<SweepRecord>& records) {
  std::map<std::pair<std::string, StorageOption>, std::vector<const SweepRecord*>> groups;
  for (const auto& r : records) groups[{r.key.region, r.key.storage}].push_back(&r);

  std::vector<std::filesystem::path> written;
  if (!groups.empty()) std::filesystem::create_directories(dir);
  for (const auto& [key, rows] : groups) {
    const auto path = dir / ("plot_" + file_safe(key.first) + "_" +
                             std::string(to_string(key.second)) + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << "year,scenario,annual_demand_kg,rd_price_ct,ohsc_eur_kg,ohsc_ref_eur_kg,"
           "reduction_eur_kg,red_rd,red_ppa,red_ely,red_sto,status\n";
    auto clamp = [](double v) { return std::isnan(v) ? v : std::max(0.0, v); };
    for (const auto* r : rows) {
      const auto& d = r->decomposition;
      out << r->key.year << ',' << to_string(r->key.scenario) << ','
          << num(r->key.annual_demand_kg) << ',' << num(r->key.rd_price_ct) << ','
          << num(r->ohsc) << ',' << num(r->ohsc_ref) << ',' << num(clamp(r->reduction)) << ','
          << num(d.red_rd) << ',' << num(d.red_ppa) << ',' << num(d.red_ely) << ','
          << num(d.red_sto) << ',' << r->status << '\n';
    }
    written.push_back(path);
  }
  return written;
}

SweepFile load_sweep_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();

  detail::YamlReader r(path.string());
  const auto root = r.load(text.str());
  r.check_keys(root, "",
               {"datasets", "scenarios", "storages", "rd_prices_ct", "annual_demands_kg",
                "horizon_steps", "month_block_steps", "prices", "parameters"});
  const auto base = path.parent_path();

  SweepFile out;
  out.sources["sweep"] = path;
  if (root["parameters"]) {
    const auto p = base / r.scalar(root["parameters"], "parameters");
    out.params = load_parameters(p);
    out.sources["parameters"] = p;
  }
  auto& g = out.grid;
  g.prices = out.params.prices;
  if (root["prices"]) detail::read_prices(r, root["prices"], "prices", g.prices);

  std::optional<int> horizon;
  int h = 0;
  if (r.get(root, "", "horizon_steps", h)) horizon = h;
  int block = 0;
  if (r.get(root, "", "month_block_steps", block)) g.month_block_steps = block;

  auto seq = [&](const char* key) {
    const auto n = root[key];
    if (!n) r.fail(root, std::string("missing '") + key + "'");
    if (!n.IsSequence()) r.fail(n, std::string("'") + key + "' must be a list");
    return n;
  };
  for (const auto& n : seq("scenarios")) {
    try {
      g.scenarios.push_back(parse_scenario_kind(r.scalar(n, "scenarios")));
    } catch (const std::invalid_argument& e) {
      r.fail(n, e.what());
    }
  }
  for (const auto& n : seq("storages")) {
    try {
      g.storages.push_back(parse_storage_option(r.scalar(n, "storages")));
    } catch (const std::invalid_argument& e) {
      r.fail(n, e.what());
    }
  }
  auto numbers = [&](const char* key, std::vector<double>& dst) {
    for (const auto& n : seq(key)) {
      double v = 0.0;
      if (!parse_double(r.scalar(n, key), v) || !(v >= 0.0))
        r.fail(n, std::string("'") + key + "' entries must be numbers >= 0");
      dst.push_back(v);
    }
  };
  numbers("rd_prices_ct", g.rd_prices_ct);
  numbers("annual_demands_kg", g.annual_demands_kg);

  std::set<std::pair<std::string, int>> seen;
  for (const auto& n : seq("datasets")) {
    r.check_keys(n, "datasets[]", {"region", "year", "inputs"});
    Dataset ds;
    if (!r.get(n, "datasets[]", "region", ds.region)) r.fail(n, "dataset without 'region'");
    if (!r.get(n, "datasets[]", "year", ds.year)) r.fail(n, "dataset without 'year'");
    if (!seen.emplace(ds.region, ds.year).second)
      r.fail(n, "duplicate dataset " + ds.region + "/" + std::to_string(ds.year));
    std::map<std::string, std::filesystem::path> files;
    if (const auto inputs = n["inputs"]) {
      r.check_keys(inputs, "datasets[].inputs",
                   {"cf_wind_off", "cf_wind_on", "cf_pv", "rd_available"});
      for (const auto& kv : inputs) {
        const auto key = kv.first.as<std::string>();
        files[key] = base / r.scalar(kv.second, "inputs." + key);
        out.sources[ds.region + "/" + std::to_string(ds.year) + "/" + key] = files[key];
      }
    }
    ds.inputs = load_inputs(files, horizon);
    if (!horizon) horizon = inputs_length(ds.inputs);
    g.datasets.push_back(std::move(ds));
  }
  g.horizon_steps = horizon.value_or(8760);

  for (const auto& ds : g.datasets) {
    ScenarioConfig probe;
    probe.horizon_steps = g.horizon_steps;
    probe.month_block_steps = g.month_block_steps;
    probe.prices = g.prices;
    probe.inputs = ds.inputs;
    try {
      probe.validate();
    } catch (const std::invalid_argument& e) {
      throw DataError(path.string(), 0,
                      "dataset " + ds.region + "/" + std::to_string(ds.year) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace h2rd
