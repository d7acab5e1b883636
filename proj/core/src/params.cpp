#include "h2rd/params.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "h2rd/error.hpp"
#include "h2rd/text_format.hpp"
#include "yaml_util.hpp"

namespace h2rd {

void Prices::validate() const {
  for (double p : {rd, grid, ppa_wind_off, ppa_wind_on, ppa_pv})
    if (!(p >= 0.0)) throw std::invalid_argument("prices must be >= 0");
}

void ParameterSet::validate() const {
  prices.validate();
  electrolyser.validate();
  compressor.validate();
  pressure_tank.validate();
  salt_cavern.validate();
  plant.validate();
  if (!(wind_offshore_cost.annual_production > 0.0))
    throw std::invalid_argument("offshore annual production must be > 0");
}

EconomicParams ParameterSet::storage(StorageOption option) const {
  switch (option) {
    case StorageOption::PressureTank: return pressure_tank;
    case StorageOption::SaltCavern: return salt_cavern;
    case StorageOption::Free: return EconomicParams{};
  }
  throw std::invalid_argument("unknown storage option");
}

namespace {

using detail::YamlReader;

void read_component(YamlReader& r, const YAML::Node& node, const std::string& path,
                    EconomicParams& p) {
  if (!node) return;
  r.check_keys(node, path,
               {"capex", "opex_fix", "opex_fix_basis", "opex_var", "depreciation_years",
                "wacc", "annuity_override"});
  r.get(node, path, "capex", p.capex);
  r.get(node, path, "opex_fix", p.opex_fix);
  if (node["opex_fix_basis"]) {
    const auto basis = r.scalar(node["opex_fix_basis"], path + ".opex_fix_basis");
    if (basis == "absolute") p.opex_fix_basis = OpexBasis::Absolute;
    else if (basis == "fraction_of_capex") p.opex_fix_basis = OpexBasis::FractionOfCapex;
    else r.fail(node["opex_fix_basis"], "opex_fix_basis must be absolute or fraction_of_capex");
  }
  r.get(node, path, "opex_var", p.opex_var);
  r.get(node, path, "depreciation_years", p.depreciation_years);
  r.get(node, path, "wacc", p.wacc);
  if (node["annuity_override"]) {
    if (node["annuity_override"].IsNull()) {
      p.annuity_override.reset();
    } else {
      double a = 0.0;
      r.get(node, path, "annuity_override", a);
      p.annuity_override = a;
    }
  }
}

/// Shortest round-trip text; emitted as a plain scalar.
std::string num(double v) { return format_shortest(v); }

void write_component(YAML::Emitter& out, const char* name, const EconomicParams& p) {
  out << YAML::Key << name << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "capex" << YAML::Value << num(p.capex);
  out << YAML::Key << "opex_fix" << YAML::Value << num(p.opex_fix);
  out << YAML::Key << "opex_fix_basis" << YAML::Value
      << (p.opex_fix_basis == OpexBasis::Absolute ? "absolute" : "fraction_of_capex");
  out << YAML::Key << "opex_var" << YAML::Value << num(p.opex_var);
  out << YAML::Key << "depreciation_years" << YAML::Value << p.depreciation_years;
  out << YAML::Key << "wacc" << YAML::Value << num(p.wacc);
  out << YAML::Key << "annuity_override" << YAML::Value;
  if (p.annuity_override) out << num(*p.annuity_override);
  else out << YAML::Null;
  out << YAML::EndMap;
}

}  // namespace

void detail::read_prices(YamlReader& r, const YAML::Node& node, const std::string& path,
                         Prices& p) {
  if (!node) return;
  r.check_keys(node, path, {"rd", "grid", "ppa_wind_off", "ppa_wind_on", "ppa_pv"});
  r.get(node, path, "rd", p.rd);
  r.get(node, path, "grid", p.grid);
  r.get(node, path, "ppa_wind_off", p.ppa_wind_off);
  r.get(node, path, "ppa_wind_on", p.ppa_wind_on);
  r.get(node, path, "ppa_pv", p.ppa_pv);
}

void detail::read_parameter_node(YamlReader& r, const YAML::Node& root, ParameterSet& p) {
  r.check_keys(root, "",
               {"prices", "wind_offshore_cost", "electrolyser", "compressor", "pressure_tank",
                "salt_cavern", "plant"});
  read_prices(r, root["prices"], "prices", p.prices);
  if (auto n = root["wind_offshore_cost"]) {
    const std::string path = "wind_offshore_cost";
    r.check_keys(n, path,
                 {"capex", "opex_fix", "opex_var", "lifetime_years", "annual_production",
                  "wacc"});
    auto& w = p.wind_offshore_cost;
    r.get(n, path, "capex", w.capex);
    r.get(n, path, "opex_fix", w.opex_fix);
    r.get(n, path, "opex_var", w.opex_var);
    r.get(n, path, "lifetime_years", w.lifetime_years);
    r.get(n, path, "annual_production", w.annual_production);
    r.get(n, path, "wacc", w.wacc);
  }
  read_component(r, root["electrolyser"], "electrolyser", p.electrolyser);
  read_component(r, root["compressor"], "compressor", p.compressor);
  read_component(r, root["pressure_tank"], "pressure_tank", p.pressure_tank);
  read_component(r, root["salt_cavern"], "salt_cavern", p.salt_cavern);
  if (auto n = root["plant"]) {
    const std::string path = "plant";
    r.check_keys(n, path,
                 {"eps_total_nom", "eps_peri", "partload_gain", "eps_h2o", "water_price",
                  "f_loss_comp", "eps_comp_pressure_tank", "eps_comp_salt_cavern",
                  "eps_comp_free", "breakpoints"});
    auto& s = p.plant;
    r.get(n, path, "eps_total_nom", s.eps_total_nom);
    r.get(n, path, "eps_peri", s.eps_peri);
    r.get(n, path, "partload_gain", s.partload_gain);
    r.get(n, path, "eps_h2o", s.eps_h2o);
    r.get(n, path, "water_price", s.water_price);
    r.get(n, path, "f_loss_comp", s.f_loss_comp);
    r.get(n, path, "eps_comp_pressure_tank", s.eps_comp_pressure_tank);
    r.get(n, path, "eps_comp_salt_cavern", s.eps_comp_salt_cavern);
    r.get(n, path, "eps_comp_free", s.eps_comp_free);
    r.get(n, path, "breakpoints", s.breakpoints);
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(r.source(), 0, e.what());
  }
}

ParameterSet parse_parameters(const std::string& yaml_text, const std::string& source) {
  YamlReader r(source);
  const YAML::Node root = r.load(yaml_text);
  ParameterSet p;
  if (root.IsNull()) return p;
  detail::read_parameter_node(r, root, p);
  return p;
}

ParameterSet load_parameters(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_parameters(buf.str(), path.string());
}

std::string parameters_to_yaml(const ParameterSet& p) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "prices" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "rd" << YAML::Value << num(p.prices.rd);
  out << YAML::Key << "grid" << YAML::Value << num(p.prices.grid);
  out << YAML::Key << "ppa_wind_off" << YAML::Value << num(p.prices.ppa_wind_off);
  out << YAML::Key << "ppa_wind_on" << YAML::Value << num(p.prices.ppa_wind_on);
  out << YAML::Key << "ppa_pv" << YAML::Value << num(p.prices.ppa_pv);
  out << YAML::EndMap;
  const auto& w = p.wind_offshore_cost;
  out << YAML::Key << "wind_offshore_cost" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "capex" << YAML::Value << num(w.capex);
  out << YAML::Key << "opex_fix" << YAML::Value << num(w.opex_fix);
  out << YAML::Key << "opex_var" << YAML::Value << num(w.opex_var);
  out << YAML::Key << "lifetime_years" << YAML::Value << w.lifetime_years;
  out << YAML::Key << "annual_production" << YAML::Value << num(w.annual_production);
  out << YAML::Key << "wacc" << YAML::Value << num(w.wacc);
  out << YAML::EndMap;
  write_component(out, "electrolyser", p.electrolyser);
  write_component(out, "compressor", p.compressor);
  write_component(out, "pressure_tank", p.pressure_tank);
  write_component(out, "salt_cavern", p.salt_cavern);
  const auto& s = p.plant;
  out << YAML::Key << "plant" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "eps_total_nom" << YAML::Value << num(s.eps_total_nom);
  out << YAML::Key << "eps_peri" << YAML::Value << num(s.eps_peri);
  out << YAML::Key << "partload_gain" << YAML::Value << num(s.partload_gain);
  out << YAML::Key << "eps_h2o" << YAML::Value << s.eps_h2o;
  out << YAML::Key << "water_price" << YAML::Value << num(s.water_price);
  out << YAML::Key << "f_loss_comp" << YAML::Value << num(s.f_loss_comp);
  out << YAML::Key << "eps_comp_pressure_tank" << YAML::Value << num(s.eps_comp_pressure_tank);
  out << YAML::Key << "eps_comp_salt_cavern" << YAML::Value << num(s.eps_comp_salt_cavern);
  out << YAML::Key << "eps_comp_free" << YAML::Value << num(s.eps_comp_free);
  out << YAML::Key << "breakpoints" << YAML::Value << s.breakpoints;
  out << YAML::EndMap;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace h2rd
