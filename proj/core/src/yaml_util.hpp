#pragma once

#include <yaml-cpp/yaml.h>

#include <initializer_list>
#include <string>
#include <string_view>

#include "h2rd/error.hpp"
#include "h2rd/params.hpp"

namespace h2rd::detail {

/// Small helper that turns yaml-cpp failures into line-numbered DataErrors.
class YamlReader {
 public:
  explicit YamlReader(std::string source) : source_(std::move(source)) {}

  const std::string& source() const { return source_; }

  YAML::Node load(const std::string& text) const {
    try {
      return YAML::Load(text);
    } catch (const YAML::Exception& e) {
      throw DataError(source_, static_cast<std::size_t>(e.mark.line + 1), e.msg);
    }
  }

  [[noreturn]] void fail(const YAML::Node& node, const std::string& message) const {
    const auto mark = node.Mark();
    const auto line = mark.line >= 0 ? static_cast<std::size_t>(mark.line + 1) : 0;
    throw DataError(source_, line, message);
  }

  void check_keys(const YAML::Node& node, const std::string& path,
                  std::initializer_list<std::string_view> allowed) const {
    if (!node.IsMap()) fail(node, (path.empty() ? "document" : path) + " must be a mapping");
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      bool ok = false;
      for (auto a : allowed) ok = ok || a == key;
      if (!ok) fail(kv.first, "unknown key '" + qualify(path, key) + "'");
    }
  }

  template <typename T>
  bool get(const YAML::Node& node, const std::string& path, const char* key, T& out) const {
    const auto child = node[key];
    if (!child) return false;
    try {
      out = child.as<T>();
    } catch (const YAML::Exception&) {
      fail(child, "invalid value for '" + qualify(path, key) + "'");
    }
    return true;
  }

  std::string scalar(const YAML::Node& node, const std::string& path) const {
    if (!node.IsScalar()) fail(node, "'" + path + "' must be a scalar");
    return node.as<std::string>();
  }

 private:
  static std::string qualify(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  std::string source_;
};

void read_prices(YamlReader& r, const YAML::Node& node, const std::string& path, Prices& p);
void read_parameter_node(YamlReader& r, const YAML::Node& root, ParameterSet& p);

}  // namespace h2rd::detail
