#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "h2rd/sweep.hpp"

using namespace h2rd;

namespace {

const std::filesystem::path kScenarios = std::filesystem::path(H2RD_FIXTURES_DIR) / "scenarios";

std::string csv(const std::vector<SweepRecord>& r) {
  std::ostringstream out;
  write_sweep_csv(out, r);
  return out.str();
}

std::string json(const std::vector<SweepRecord>& r) {
  std::ostringstream out;
  write_sweep_json(out, r);
  return out.str();
}

}  // namespace

TEST(BaseKind, Mapping) {
  EXPECT_EQ(base_kind(ScenarioKind::FirstMoverRd), ScenarioKind::FirstMover);
  EXPECT_EQ(base_kind(ScenarioKind::RdPpa), ScenarioKind::PpaRef);
  EXPECT_EQ(base_kind(ScenarioKind::RdOnly), ScenarioKind::PpaRef);
}

TEST(CanonicalOrder, PriceIsInnermost) {
  SweepKey a{"T1", 2021, ScenarioKind::RdPpa, StorageOption::SaltCavern, 4.0, 1e6};
  SweepKey b = a;
  b.rd_price_ct = 2.0;
  EXPECT_TRUE(canonical_less(b, a));
  b.annual_demand_kg = 5e5;
  b.rd_price_ct = 10.0;
  EXPECT_TRUE(canonical_less(b, a));
  b = a;
  b.region = "H1";
  b.rd_price_ct = 10.0;
  EXPECT_TRUE(canonical_less(b, a));
  EXPECT_FALSE(canonical_less(a, a));
}

TEST(Sweep, EmptyGrid) {
  SweepGrid g;
  EXPECT_EQ(g.size(), 0u);
  const auto backend = make_backend("highs");
  EXPECT_TRUE(run_sweep(g, {}, *backend, 4).empty());
}

TEST(Sweep, TwelvePointGridIsDeterministic) {
  const auto file = load_sweep_file(kScenarios / "sweep_12.yaml");
  EXPECT_EQ(file.grid.size(), 12u);
  const auto backend = make_backend("highs");
  const auto one = run_sweep(file.grid, file.params, *backend, 1);
  const auto eight = run_sweep(file.grid, file.params, *backend, 8);
  ASSERT_EQ(one.size(), 12u);
  EXPECT_EQ(csv(one), csv(eight));
  EXPECT_EQ(json(one), json(eight));

  for (std::size_t i = 1; i < one.size(); ++i)
    EXPECT_TRUE(canonical_less(one[i - 1].key, one[i].key));
  for (const auto& r : one) {
    EXPECT_EQ(r.status, "optimal");
    EXPECT_NEAR(r.reduction, r.ohsc_ref - r.ohsc, 1e-12);
    EXPECT_NEAR(r.decomposition.total, r.reduction, 1e-9 * std::max(1.0, r.ohsc_ref));
    EXPECT_GE(r.reduction, -1e-6 * r.ohsc_ref);
  }
  // Within each line, OHSC rises and the reduction falls with the price.
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& a = one[i - 1];
    const auto& b = one[i];
    if (a.key.storage != b.key.storage || a.key.annual_demand_kg != b.key.annual_demand_kg)
      continue;
    EXPECT_LT(a.key.rd_price_ct, b.key.rd_price_ct);
    EXPECT_LE(a.ohsc, b.ohsc * (1.0 + 1e-6));
    EXPECT_GE(a.reduction, b.reduction - 1e-6 * a.ohsc_ref);
  }
}

TEST(Sweep, CsvHeaderAndNan) {
  SweepRecord r;
  r.key = {"T1", 2021, ScenarioKind::RdPpa, StorageOption::SaltCavern, 2.0, 1e6};
  r.status = "infeasible";
  r.ohsc = std::nan("");
  const auto text = csv({r});
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "region,year,scenario,storage,rd_price_ct,annual_demand_kg,ohsc_eur_kg,"
            "ohsc_ref_eur_kg,reduction_eur_kg,p_nom_ely_kw,s_ppa,s_rd,rd_used_share,rd_flh,"
            "red_rd,red_ppa,red_ely,red_sto,residual,status");
  EXPECT_NE(text.find("T1,2021,RD_PPA,salt_cavern,2,"), std::string::npos) << text;
  EXPECT_NE(text.find(",,"), std::string::npos);
  EXPECT_NE(json({r}).find("null"), std::string::npos);
}

TEST(Sweep, PlotFilesPerRegionAndStorage) {
  const auto file = load_sweep_file(kScenarios / "sweep_12.yaml");
  const auto backend = make_backend("highs");
  auto grid = file.grid;
  grid.annual_demands_kg = {5e5};
  const auto records = run_sweep(grid, file.params, *backend, 2);
  const auto dir = std::filesystem::temp_directory_path() / "h2rd_sweep_plot";
  std::filesystem::remove_all(dir);
  const auto paths = write_plot_data(dir, records);
  ASSERT_EQ(paths.size(), 2u);
  for (const auto& p : paths) {
    EXPECT_TRUE(std::filesystem::exists(p));
    EXPECT_EQ(p.filename().string().rfind("plot_T1_", 0), 0u);
  }
}
