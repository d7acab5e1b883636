#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "h2rd/csv_io.hpp"
#include "h2rd/text_format.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = H2RD_FIXTURES_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(H2RD_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("h2rd_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ',')) f.push_back(cell);
  if (!line.empty() && line.back() == ',') f.emplace_back();
  return f;
}

std::string reconstruct_args(const fs::path& out, const fs::path& transmission) {
  const auto rec = kFixtures / "reconstruction";
  return "reconstruct --feedin " + (rec / "feedin").string() + " --transmission " +
         transmission.string() + " --distribution " + (rec / "distribution.csv").string() +
         " --mapping " + (rec / "mapping.csv").string() + " --out " + out.string();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("solve").code, 64);
  EXPECT_EQ(run("solve /does/not/exist.yaml --out x").code, 64);
  EXPECT_EQ(run("sweep " + (kFixtures / "scenarios/sweep_12.yaml").string() +
                " --out x --jobs 0").code, 64);
  EXPECT_EQ(run("solve " + (kFixtures / "scenarios/rd_ppa.yaml").string() +
                " --out " + scratch("backend").string() + " --backend nope").code, 64);
}

TEST(Cli, PpaPrice) {
  auto r = run("ppa-price");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.0883\n");
  r = run("ppa-price --capex 0 --opex-fix 0 --opex-var 0.05 --production 3000");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.0500\n");
  r = run("ppa-price --capex 1000 --opex-fix 10 --opex-var 0 --lifetime 20 --production 2000 "
          "--wacc 0.05");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.0451\n");
  EXPECT_EQ(run("ppa-price --production 0").code, 65);
}

TEST(Cli, SolveWritesReportAndManifest) {
  const auto dir = scratch("solve");
  const auto r = run("solve " + (kFixtures / "scenarios/steady_rd_only.yaml").string() +
                     " --out " + dir.string() + " --dump-lp " + (dir / "p.mps").string());
  ASSERT_EQ(r.code, 0) << r.out;
  for (const char* f : {"solution.json", "ohsc.txt", "manifest.json", "p.mps"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  const auto manifest = slurp(dir / "manifest.json");
  EXPECT_NE(manifest.find("sha256"), std::string::npos);
  EXPECT_NE(manifest.find("HiGHS"), std::string::npos);
  const auto at = r.out.find("ohsc ");
  ASSERT_NE(at, std::string::npos) << r.out;
  const double ohsc = std::stod(r.out.substr(at + 5));
  EXPECT_NEAR(ohsc, 1.1396, 1e-3);
}

TEST(Cli, ZeroDemandCostsNothing) {
  const auto dir = scratch("zero");
  const auto r = run("solve " + (kFixtures / "scenarios/rd_ppa.yaml").string() + " --out " +
                     dir.string() + " --demand 0");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(slurp(dir / "ohsc.txt").find("objective 0"), std::string::npos)
      << slurp(dir / "ohsc.txt");
}

TEST(Cli, InfeasibleExitCode) {
  const auto dir = scratch("infeasible");
  const auto zeros = dir / "zeros.csv";
  {
    std::ofstream out(zeros);
    out << "# resolution_min=60\nstep,value\n";
    for (int t = 0; t < 24; ++t) out << t << ",0\n";
  }
  const auto scen = dir / "s.yaml";
  {
    std::ofstream out(scen);
    out << "scenario: {kind: RD_ONLY}\nstorage: salt_cavern\ndemand: {annual_kg: 1.0e5}\n"
           "inputs: {rd_available: zeros.csv}\n";
  }
  const auto r = run("solve " + scen.string() + " --out " + (dir / "out").string());
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_TRUE(fs::exists(dir / "out" / "manifest.json"));
}

TEST(Cli, MalformedCsvIsDataError) {
  const auto dir = scratch("malformed");
  {
    std::ofstream out(dir / "bad.csv");
    out << "# resolution_min=60\nstep,value\n0,1.0\n1,abc\n";
  }
  const auto r = run("stats " + (dir / "bad.csv").string());
  EXPECT_EQ(r.code, 65);
  EXPECT_NE(r.out.find(":4"), std::string::npos) << r.out;
}

TEST(Cli, ReconstructMatchesDeclaredTargets) {
  const auto dir = scratch("reconstruct");
  const auto r = run(reconstruct_args(dir, kFixtures / "reconstruction/transmission.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ST99"), std::string::npos) << "unmapped station warning";
  EXPECT_FALSE(fs::exists(dir / "stations" / "ST99.csv") &&
               slurp(dir / "regions" / "T1.csv").empty());
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));

  std::ifstream in(dir / "stats.csv");
  std::string line;
  std::getline(in, line);
  double declared = 0.0, covered = 0.0;
  while (std::getline(in, line)) {
    const auto f = split(line);
    ASSERT_EQ(f.size(), 10u) << line;
    if (f[0] != "station" || f[7].empty()) continue;
    declared += std::stod(f[7]);
    covered += std::stod(f[7]) * std::stod(f[8]);
  }
  EXPECT_DOUBLE_EQ(declared, 42000.0);
  EXPECT_LE(std::abs(covered - declared), 1e-3 * declared);

  // Written series re-ingest and re-serialize to identical bytes.
  for (const auto& entry : fs::directory_iterator(dir / "stations")) {
    const auto s = h2rd::read_series_csv(entry.path());
    std::ostringstream again;
    h2rd::write_series_csv(again, s);
    EXPECT_EQ(again.str(), slurp(entry.path())) << entry.path();
  }
}

TEST(Cli, EmptyMeasureLogGivesZeroSeries) {
  const auto dir = scratch("empty_log");
  const auto log = dir / "transmission.csv";
  {
    std::ofstream out(log);
    out << "station_id,start_step,end_step,cap_power_kw,target_energy_kwh\n";
  }
  const auto empty_dist = dir / "distribution.csv";
  {
    std::ofstream out(empty_dist);
    out << "station_id,start_step,end_step,cap_fraction,nominal_power_kw,coverage\n";
  }
  const auto rec = kFixtures / "reconstruction";
  const auto out = dir / "out";
  const auto r = run("reconstruct --feedin " + (rec / "feedin").string() + " --transmission " +
                     log.string() + " --distribution " + empty_dist.string() + " --mapping " +
                     (rec / "mapping.csv").string() + " --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& entry : fs::directory_iterator(out / "stations")) {
    const auto s = h2rd::read_series_csv(entry.path());
    for (double v : s.values()) EXPECT_EQ(v, 0.0);
  }
}

TEST(Cli, SweepIsIndependentOfJobs) {
  const auto a = scratch("sweep1");
  const auto b = scratch("sweep8");
  const auto file = (kFixtures / "scenarios/sweep_12.yaml").string();
  ASSERT_EQ(run("sweep " + file + " --out " + a.string() + " --jobs 1").code, 0);
  ASSERT_EQ(run("sweep " + file + " --out " + b.string() + " --jobs 8").code, 0);
  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file() || entry.path().filename() == "manifest.json") continue;
    const auto rel = fs::relative(entry.path(), a);
    EXPECT_EQ(slurp(entry.path()), slurp(b / rel)) << rel;
    ++compared;
  }
  EXPECT_GE(compared, 4u);
  std::ifstream in(a / "sweep.csv");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 13u);
}

TEST(Cli, DumpLp) {
  const auto dir = scratch("dump");
  const auto r = run("dump-lp " + (kFixtures / "scenarios/fm_rd.yaml").string() + " -o " +
                     (dir / "fm.mps").string());
  ASSERT_EQ(r.code, 0) << r.out;
  const auto mps = slurp(dir / "fm.mps");
  EXPECT_NE(mps.find("monthly_matching"), std::string::npos);
  EXPECT_NE(mps.find("ENDATA"), std::string::npos);
}
