#include "h2rd/scenario_file.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <vector>

#include "h2rd/csv_io.hpp"
#include "h2rd/error.hpp"
#include "yaml_util.hpp"

namespace h2rd {

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TimeSeries truncate(const TimeSeries& s, std::optional<int> horizon) {
  if (!horizon || s.size() <= static_cast<std::size_t>(*horizon)) return s;
  auto v = s.values().first(static_cast<std::size_t>(*horizon));
  return TimeSeries(s.resolution(), std::vector<double>(v.begin(), v.end()), s.start_index());
}

constexpr std::array<std::string_view, 4> kInputKeys{"cf_wind_off", "cf_wind_on", "cf_pv",
                                                     "rd_available"};

std::optional<TimeSeries>& slot(ScenarioInputs& in, std::string_view key) {
  if (key == "cf_wind_off") return in.cf_wind_off;
  if (key == "cf_wind_on") return in.cf_wind_on;
  if (key == "cf_pv") return in.cf_pv;
  return in.rd_available;
}

}  // namespace

std::optional<int> inputs_length(const ScenarioInputs& in) {
  for (const auto* s : {&in.cf_wind_off, &in.cf_wind_on, &in.cf_pv, &in.rd_available})
    if (*s) return static_cast<int>((*s)->size());
  return std::nullopt;
}

ScenarioInputs load_inputs(const std::map<std::string, std::filesystem::path>& files,
                           std::optional<int> horizon) {
  ScenarioInputs in;
  for (const auto& [key, path] : files) {
    bool known = false;
    for (auto k : kInputKeys) known = known || k == key;
    if (!known) throw DataError(path.string(), 0, "unknown input '" + key + "'");
    slot(in, key) = truncate(read_series_csv(path), horizon);
  }
  return in;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  detail::YamlReader r(path.string());
  const auto root = r.load(read_text(path));
  r.check_keys(root, "", {"scenario", "storage", "prices", "demand", "inputs", "parameters"});
  const auto base = path.parent_path();

  ScenarioFile out;
  out.sources["scenario"] = path;
  if (root["parameters"]) {
    const auto p = base / r.scalar(root["parameters"], "parameters");
    out.params = load_parameters(p);
    out.sources["parameters"] = p;
  }
  auto& cfg = out.config;
  cfg.prices = out.params.prices;

  std::optional<int> horizon;
  const auto sc = root["scenario"];
  if (!sc) r.fail(root, "missing 'scenario' block");
  r.check_keys(sc, "scenario", {"kind", "horizon_steps", "month_block_steps"});
  if (!sc["kind"]) r.fail(sc, "missing 'scenario.kind'");
  try {
    cfg.kind = parse_scenario_kind(r.scalar(sc["kind"], "scenario.kind"));
  } catch (const std::invalid_argument& e) {
    r.fail(sc["kind"], e.what());
  }
  int h = 0;
  if (r.get(sc, "scenario", "horizon_steps", h)) horizon = h;
  int block = 0;
  if (r.get(sc, "scenario", "month_block_steps", block)) cfg.month_block_steps = block;

  if (root["storage"]) {
    try {
      cfg.storage = parse_storage_option(r.scalar(root["storage"], "storage"));
    } catch (const std::invalid_argument& e) {
      r.fail(root["storage"], e.what());
    }
  }
  if (root["prices"]) detail::read_prices(r, root["prices"], "prices", cfg.prices);

  const auto demand = root["demand"];
  if (!demand) r.fail(root, "missing 'demand' block");
  r.check_keys(demand, "demand", {"annual_kg"});
  if (!r.get(demand, "demand", "annual_kg", cfg.annual_demand_kg))
    r.fail(demand, "missing 'demand.annual_kg'");

  std::map<std::string, std::filesystem::path> files;
  if (const auto inputs = root["inputs"]) {
    r.check_keys(inputs, "inputs", {"cf_wind_off", "cf_wind_on", "cf_pv", "rd_available"});
    for (const auto& kv : inputs) {
      const auto key = kv.first.as<std::string>();
      files[key] = base / r.scalar(kv.second, "inputs." + key);
      out.sources["inputs." + key] = files[key];
    }
  }
  cfg.inputs = load_inputs(files, horizon);
  cfg.horizon_steps = horizon.value_or(inputs_length(cfg.inputs).value_or(8760));
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(path.string(), 0, e.what());
  }
  return out;
}

}  // namespace h2rd
