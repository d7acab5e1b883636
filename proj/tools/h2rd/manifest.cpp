#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "h2rd/error.hpp"

namespace h2rd::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

void RunManifest::write(const std::filesystem::path& dir) const {
  nlohmann::ordered_json j;
  j["tool"] = "h2rd";
  j["version"] = H2RD_VERSION;
  j["command"] = command;
  j["backend"] = backend;
  j["config"] = config;
  auto files = nlohmann::ordered_json::object();
  for (const auto& [role, path] : inputs)
    files[role] = {{"path", path.string()}, {"sha256", sha256_file(path)}};
  j["inputs"] = files;
  auto outs = nlohmann::ordered_json::array();
  for (const auto& p : outputs) outs.push_back(p.filename().string());
  j["outputs"] = outs;
  j["wall_seconds"] = wall_seconds;
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << j.dump(2) << '\n';
}

}  // namespace h2rd::cli
