#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "h2rd/csv_io.hpp"
#include "h2rd/error.hpp"
#include "h2rd/pipeline.hpp"
#include "h2rd/reconstruction.hpp"
#include "h2rd/region.hpp"
#include "h2rd/time_series.hpp"

using namespace h2rd;

namespace {

TimeSeries hourly(std::vector<double> v) { return TimeSeries(Resolution::Hour, std::move(v)); }
TimeSeries quarter(std::vector<double> v, std::int64_t start = 0) {
  return TimeSeries(Resolution::Quarter, std::move(v), start);
}
std::vector<double> values(const TimeSeries& s) { return {s.values().begin(), s.values().end()}; }

void expect_near(const std::vector<double>& got, const std::vector<double>& want,
                 double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "at " << i;
}

}  // namespace

TEST(TimeSeries, RejectsInvalidValues) {
  EXPECT_THROW(hourly({}), std::invalid_argument);
  EXPECT_THROW(hourly({1.0, -0.5}), std::invalid_argument);
  EXPECT_THROW(hourly({NAN}), std::invalid_argument);
  EXPECT_THROW(resolution_from_minutes(30), std::invalid_argument);
}

TEST(TimeSeries, EnergyUsesStepLength) {
  EXPECT_DOUBLE_EQ(quarter({4, 4, 4, 4}).energy(), 4.0);
  EXPECT_DOUBLE_EQ(hourly({4, 4}).energy(), 8.0);
  EXPECT_EQ(quarter({1, 2}, 6).end_index(), 8);
}

TEST(Resample, QuarterAnchorsAndHolds) {
  expect_near(values(resample_to_quarter(hourly({0, 4}))), {0, 1, 2, 3, 4, 4, 4, 4});
  expect_near(values(resample_to_quarter(hourly({2}))), {2, 2, 2, 2});
  expect_near(values(resample_to_quarter(hourly({3, 3, 3}))), std::vector<double>(12, 3.0));
  EXPECT_THROW(resample_to_quarter(quarter({1, 2, 3, 4})), std::invalid_argument);
}

TEST(Resample, HourlyMeans) {
  expect_near(values(resample_to_hour(quarter({1, 2, 3, 4}))), {2.5});
  expect_near(values(resample_to_hour(quarter({5, 3, 1, 0, 0, 0, 0, 0}))), {2.25, 0});
  expect_near(values(resample_to_hour(quarter(std::vector<double>(8, 7.0)))), {7, 7});
  EXPECT_THROW(resample_to_hour(quarter({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(resample_to_hour(hourly({1, 2, 3, 4})), std::invalid_argument);
}

TEST(Resample, RoundTripKeepsLengthAndHourlyEnergy) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    const auto s = hourly(gen::uniform(rng, n, 0.0, 100.0));
    const auto q = resample_to_quarter(s);
    const auto back = resample_to_hour(q);
    EXPECT_EQ(back.size(), s.size());
    EXPECT_NEAR(back.energy(), q.energy(), 1e-9 * std::max(1.0, q.energy()));
  }
}

TEST(ClipTransmission, FixedCap) {
  const auto feed = quarter({10000, 8000, 6000, 4000});
  const auto m = RedispatchMeasure::transmission("S", {0, 4}, 5000);
  const auto r = clip_transmission(feed, m);
  expect_near(values(r.series), {5000, 3000, 1000, 0});
  EXPECT_DOUBLE_EQ(r.series.energy(), 2250.0);
  EXPECT_FALSE(r.shortfall);
}

TEST(ClipTransmission, SolvesCapForTarget) {
  const auto feed = quarter({10000, 8000, 6000, 4000});
  const auto m = RedispatchMeasure::transmission("S", {0, 4}, 5000, 1000.0);
  const auto r = clip_transmission(feed, m);
  EXPECT_NEAR(r.cap_kw, 7000.0, 7000.0 * 1e-6);
  expect_near(values(r.series), {3000, 1000, 0, 0}, 0.05);
  EXPECT_NEAR(r.series.energy(), 1000.0, 1000.0 * 1e-6);
  EXPECT_LE(r.iterations, kMaxBisectionIterations);
}

TEST(ClipTransmission, CapAboveFeedInGivesZero) {
  const auto r = clip_transmission(quarter({10, 8, 6, 4}),
                                   RedispatchMeasure::transmission("S", {0, 4}, 50));
  expect_near(values(r.series), {0, 0, 0, 0});
}

TEST(ClipTransmission, ShortfallIsReported) {
  const auto r = clip_transmission(quarter({4, 4, 4, 4}),
                                   RedispatchMeasure::transmission("S", {0, 4}, 2, 100.0));
  EXPECT_TRUE(r.shortfall);
  EXPECT_DOUBLE_EQ(r.cap_kw, 0.0);
  EXPECT_DOUBLE_EQ(r.series.energy(), 4.0);
}

TEST(ClipTransmission, ZeroOutsideWindowAndErrors) {
  const auto feed = quarter({10, 10, 10, 10, 10, 10});
  const auto r = clip_transmission(feed, RedispatchMeasure::transmission("S", {2, 4}, 4));
  expect_near(values(r.series), {0, 0, 6, 6, 0, 0});
  EXPECT_THROW(clip_transmission(feed, RedispatchMeasure::transmission("S", {4, 9}, 4)),
               std::invalid_argument);
  EXPECT_THROW(clip_transmission(feed, RedispatchMeasure::transmission("S", {2, 2}, 4)),
               std::invalid_argument);
  EXPECT_THROW(clip_transmission(feed, RedispatchMeasure::transmission("S", {0, 2}, -1)),
               std::invalid_argument);
  EXPECT_THROW(clip_transmission(feed, RedispatchMeasure::distribution("S", {0, 2}, 0.5, 10)),
               std::invalid_argument);
}

TEST(ClipDistribution, Examples) {
  const auto feed = quarter({10000, 8000, 6000, 4000});
  expect_near(values(clip_distribution(
                  feed, RedispatchMeasure::distribution("S", {0, 4}, 0.5, 10000))),
              {5000, 3000, 1000, 0});
  expect_near(values(clip_distribution(
                  feed, RedispatchMeasure::distribution("S", {0, 4}, 0.5, 10000,
                                                        {0.5, 1, 1, 1}))),
              {2500, 3000, 1000, 0});
  expect_near(values(clip_distribution(
                  feed, RedispatchMeasure::distribution("S", {0, 4}, 1.0, 10000))),
              {0, 0, 0, 0});
}

TEST(ClipDistribution, RejectsBadCoverage) {
  const auto feed = quarter({10, 10});
  EXPECT_THROW(clip_distribution(feed, RedispatchMeasure::distribution("S", {0, 2}, 0.5, 10,
                                                                        {0.0, 1.0})),
               std::invalid_argument);
  EXPECT_THROW(clip_distribution(feed, RedispatchMeasure::distribution("S", {0, 2}, 0.5, 10,
                                                                        {1.0, 1.0, 1.0})),
               std::invalid_argument);
  EXPECT_THROW(clip_distribution(feed, RedispatchMeasure::distribution("S", {0, 2}, 1.5, 10)),
               std::invalid_argument);
}

TEST(ClipProperties, OutputsBetweenZeroAndFeedIn) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
    const auto feed = quarter(gen::uniform(rng, static_cast<std::size_t>(n), 0.0, 1000.0));
    const auto b = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
    const auto e = std::uniform_int_distribution<std::int64_t>(b + 1, n)(rng);
    const double cap = std::uniform_real_distribution<double>(0.0, 1200.0)(rng);
    std::optional<double> target;
    if (trial % 2) target = std::uniform_real_distribution<double>(0.0, 200.0)(rng);
    const auto t = clip_transmission(feed, RedispatchMeasure::transmission("S", {b, e}, cap, target));
    const auto d = clip_distribution(
        feed, RedispatchMeasure::distribution("S", {b, e}, cap / 1200.0, 1000.0, {0.7}));
    for (std::size_t i = 0; i < feed.size(); ++i) {
      EXPECT_GE(t.series[i], 0.0);
      EXPECT_LE(t.series[i], feed[i]);
      EXPECT_GE(d[i], 0.0);
      EXPECT_LE(d[i], feed[i]);
    }
    if (target && !t.shortfall && *target > 0.0)
      EXPECT_LE(std::abs(t.series.energy() - *target) / *target, kTargetRelTolerance);
  }
}

TEST(Accumulate, PadsAndSums) {
  expect_near(values(accumulate_measures({}, 4)), {0, 0, 0, 0});
  const std::vector<TimeSeries> disjoint{quarter({1, 2}, 0), quarter({3, 4}, 2)};
  expect_near(values(accumulate_measures(disjoint, 5)), {1, 2, 3, 4, 0});
  const std::vector<TimeSeries> overlap{quarter({1, 2, 3}, 0), quarter({10, 20}, 1)};
  expect_near(values(accumulate_measures(overlap, 3)), {1, 12, 23});
  const std::vector<TimeSeries> outside{quarter({1, 2}, 3)};
  EXPECT_THROW(accumulate_measures(outside, 4), std::invalid_argument);
}

TEST(Region, AggregatesMappedStationsOnly) {
  RegionMapping map({{"A", "T1"}, {"B", "T1"}, {"C", "H1"}});
  std::map<std::string, TimeSeries> st{
      {"A", hourly({1, 0})}, {"B", hourly({0, 1})}, {"C", hourly({5, 5})}, {"D", hourly({9, 9})}};
  expect_near(values(aggregate_region(st, map, "T1")), {1, 1});
  expect_near(values(aggregate_region(st, map, "H1")), {5, 5});
  std::map<std::string, TimeSeries> one{{"A", hourly({3, 4})}};
  expect_near(values(aggregate_region(one, map, "T1")), {3, 4});
  EXPECT_THROW(map.add("A", "H1"), std::invalid_argument);
  EXPECT_NO_THROW(map.add("A", "T1"));
  EXPECT_FALSE(map.region_of("D").has_value());
}

TEST(Region, RejectsMixedShapes) {
  RegionMapping map({{"A", "T1"}, {"B", "T1"}});
  std::map<std::string, TimeSeries> st{{"A", hourly({1, 0})}, {"B", hourly({0, 1, 2})}};
  EXPECT_THROW(aggregate_region(st, map, "T1"), std::invalid_argument);
}

TEST(Region, OrderIndependent) {
  gen::Rng rng(3);
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, TimeSeries> st;
  for (int i = 0; i < 12; ++i) {
    const auto id = "S" + std::to_string(i);
    entries.emplace_back(id, i % 3 ? "T1" : "H1");
    st.emplace(id, hourly(gen::uniform(rng, 24, 0.0, 10.0)));
  }
  const auto reference = aggregate_region(st, RegionMapping(entries), "T1");
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(entries.begin(), entries.end(), rng);
    EXPECT_EQ(aggregate_region(st, RegionMapping(entries), "T1"), reference);
  }
}

TEST(SeriesStats, Examples) {
  auto s = series_stats(hourly({0, 0, 0}));
  EXPECT_EQ(s.hours_with_measure, 0);
  EXPECT_EQ(s.energy_kwh, 0.0);
  EXPECT_EQ(s.eq_full_load_hours, 0.0);
  s = series_stats(hourly({10, 0, 5}));
  EXPECT_EQ(s.hours_with_measure, 2);
  EXPECT_DOUBLE_EQ(s.energy_kwh, 15.0);
  EXPECT_DOUBLE_EQ(s.eq_full_load_hours, 1.5);
  s = series_stats(TimeSeries::constant(Resolution::Hour, 24, 1.0));
  EXPECT_EQ(s.hours_with_measure, 24);
  EXPECT_DOUBLE_EQ(s.energy_kwh, 24.0);
  EXPECT_DOUBLE_EQ(s.eq_full_load_hours, 24.0);
  EXPECT_THROW(series_stats(quarter({1, 2, 3, 4})), std::invalid_argument);
}

TEST(SeriesStats, FullLoadHoursBoundedByLength) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 100)(rng);
    const auto s = hourly(gen::uniform(rng, n, 0.0, 50.0));
    EXPECT_LE(series_stats(s).eq_full_load_hours, static_cast<double>(n) + 1e-9);
  }
}

TEST(Pipeline, FixtureMatchesDeclaredTargets) {
  const std::filesystem::path dir = H2RD_FIXTURES_DIR "/reconstruction";
  ReconstructionInputs in;
  for (const auto* st : {"ST01", "ST02", "ST03", "ST99"})
    in.feedin.emplace(st, read_series_csv(dir / "feedin" / (std::string(st) + ".csv")));
  in.measures = read_transmission_log(dir / "transmission.csv");
  const auto dist = read_distribution_log(dir / "distribution.csv");
  in.measures.insert(in.measures.end(), dist.begin(), dist.end());
  in.mapping = read_region_mapping(dir / "mapping.csv");

  const auto res = reconstruct(in);
  EXPECT_EQ(res.horizon_quarter, 192);
  double declared = 0.0, got = 0.0;
  for (const auto& r : res.reports)
    if (r.declared_kwh) {
      declared += *r.declared_kwh;
      got += r.targeted_kwh;
    }
  EXPECT_DOUBLE_EQ(declared, 42000.0);
  EXPECT_LE(std::abs(got - declared) / declared, 1e-3);

  EXPECT_EQ(res.regions.count("T1"), 1u);
  EXPECT_EQ(res.regions.count("H1"), 1u);
  EXPECT_TRUE(std::any_of(res.warnings.begin(), res.warnings.end(),
                          [](const std::string& w) { return w.find("ST99") != std::string::npos; }));
  const double t1 = res.regions.at("T1").energy();
  EXPECT_NEAR(t1, res.stations.at("ST01").energy() + res.stations.at("ST02").energy(), 1e-6);
}

TEST(Pipeline, EmptyLogGivesZeros) {
  ReconstructionInputs in;
  in.feedin.emplace("A", hourly({5, 6, 7}));
  in.mapping.add("A", "T1");
  const auto res = reconstruct(in);
  ASSERT_EQ(res.reports.size(), 1u);
  EXPECT_EQ(res.reports[0].stats.hours_with_measure, 0);
  EXPECT_EQ(res.reports[0].stats.energy_kwh, 0.0);
  EXPECT_EQ(res.regions.at("T1").energy(), 0.0);
}

TEST(Pipeline, ClampsWindowsToHorizon) {
  ReconstructionInputs in;
  in.feedin.emplace("A", quarter(std::vector<double>(8, 10.0)));
  in.mapping.add("A", "T1");
  in.measures.push_back(RedispatchMeasure::transmission("A", {6, 12}, 4));
  in.measures.push_back(RedispatchMeasure::transmission("A", {20, 24}, 4));
  const auto res = reconstruct(in);
  EXPECT_EQ(res.warnings.size(), 2u);
  EXPECT_DOUBLE_EQ(res.stations.at("A").energy(), 2 * 6 * 0.25);
  ReconstructionInputs bad = in;
  bad.measures.push_back(RedispatchMeasure::transmission("Z", {0, 4}, 4));
  EXPECT_THROW(reconstruct(bad), DataError);
}
