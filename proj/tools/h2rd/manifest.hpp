#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace h2rd::cli {

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Written as manifest.json next to every result set.
struct RunManifest {
  std::string command;
  std::string backend;
  nlohmann::ordered_json config;
  std::map<std::string, std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  double wall_seconds = 0.0;

  void write(const std::filesystem::path& dir) const;
};

}  // namespace h2rd::cli
