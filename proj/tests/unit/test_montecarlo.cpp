#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rsstilt/montecarlo.hpp"
#include "support.hpp"

using namespace rsstilt;

namespace {

StudyConfig small_study() {
  StudyConfig c;
  c.replications = 60;
  c.B = 99;
  c.seed = RngSeed{77, 0};
  c.threads = 1;
  return c;
}

}  // namespace

TEST(RunStudy, IdenticalForAnyThreadCount) {
  StudyConfig c = small_study();
  const StudyResult one = run_study(c);
  c.threads = 3;
  const StudyResult three = run_study(c);
  ASSERT_EQ(one.methods.size(), three.methods.size());
  for (std::size_t j = 0; j < one.methods.size(); ++j) {
    EXPECT_EQ(one.methods[j].rate, three.methods[j].rate);
    EXPECT_EQ(one.methods[j].p_values, three.methods[j].p_values);
  }
}

TEST(RunStudy, MethodSeedsIndependentOfMethodList) {
  StudyConfig c = small_study();
  const StudyResult all = run_study(c);
  c.methods = {TestMethod::ear};
  EXPECT_EQ(run_study(c).at(TestMethod::ear).p_values, all.at(TestMethod::ear).p_values);
}

TEST(RunStudy, RateAndStandardError) {
  StudyConfig c = small_study();
  c.methods = {TestMethod::pt, TestMethod::wt};
  const StudyResult r = run_study(c);
  for (const auto& m : r.methods) {
    EXPECT_EQ(m.successes + m.failures, c.replications);
    EXPECT_EQ(m.p_values.size(), m.successes);
    double rejected = 0.0;
    for (double p : m.p_values) rejected += p <= c.alpha;
    EXPECT_DOUBLE_EQ(m.rate, rejected / static_cast<double>(m.successes));
    ASSERT_TRUE(m.se.has_value());
    EXPECT_DOUBLE_EQ(*m.se, std::sqrt(m.rate * (1 - m.rate) / static_cast<double>(m.successes)));
  }
  c.replications = 1;
  EXPECT_FALSE(run_study(c).methods.front().se.has_value());
}

TEST(RunStudy, FailedReplicationsAreCountedNotRejected) {
  StudyConfig c = small_study();
  c.design = named_design(2);  // unbalanced: Liu cannot run
  c.methods = {TestMethod::pt, TestMethod::liu};
  const StudyResult r = run_study(c);
  EXPECT_EQ(r.at(TestMethod::liu).failures, c.replications);
  EXPECT_EQ(r.at(TestMethod::liu).successes, 0u);
  EXPECT_FALSE(r.at(TestMethod::liu).se.has_value());
  EXPECT_EQ(r.at(TestMethod::pt).failures, 0u);
}

TEST(RunStudy, SampleShiftMatchesDelta) {
  StudyConfig c = small_study();
  c.dist = DistributionSpec::exponential(2.0);
  c.mu0 = 1.0;
  c.delta = 0.5;
  // Location shift puts the sample mean near mu0 + delta.
  double total = 0.0;
  for (std::size_t i = 0; i < 400; ++i) total += study_sample(c, i).grand_mean();
  EXPECT_NEAR(total / 400.0, 1.5, 0.05);
}

TEST(PowerStudy, IncreasesWithShift) {
  StudyConfig c = small_study();
  c.replications = 200;
  c.methods = {TestMethod::pt, TestMethod::ear};
  c.delta = 0.1;
  const StudyResult low = run_power_study(c);
  c.delta = 0.5;
  const StudyResult high = run_power_study(c);
  for (auto m : c.methods) EXPECT_GT(high.at(m).rate, low.at(m).rate) << test_method_name(m);
  EXPECT_TRUE(high.at(TestMethod::ear).p_values.empty());
  EXPECT_FALSE(high.at(TestMethod::pt).p_values.empty());
}

TEST(Wrappers, Preconditions) {
  StudyConfig c = small_study();
  c.delta = 0.2;
  EXPECT_KIND(run_size_study(c), parse_error);
  EXPECT_KIND(qq_pvalues(c, TestMethod::pt), parse_error);
  c.delta = 0.0;
  EXPECT_KIND(run_imperfect_study(c), negative_sigma);
  c.replications = 0;
  EXPECT_KIND(run_study(c), parse_error);
  c.replications = 5;
  c.alpha = 1.5;
  EXPECT_KIND(run_study(c), parse_error);
}

TEST(QqPValues, SortedWithPlottingPositions) {
  StudyConfig c = small_study();
  const auto qq = qq_pvalues(c, TestMethod::wt);
  ASSERT_EQ(qq.size(), c.replications);
  for (std::size_t i = 0; i < qq.size(); ++i) {
    EXPECT_DOUBLE_EQ(qq[i].uniform, (i + 0.5) / static_cast<double>(qq.size()));
    if (i > 0) EXPECT_LE(qq[i - 1].p_value, qq[i].p_value);
  }
}

TEST(Ks, DistanceAndCriticalValue) {
  EXPECT_DOUBLE_EQ(ks_uniform_distance({0.5}), 0.5);
  EXPECT_DOUBLE_EQ(ks_uniform_distance({0.125, 0.375, 0.625, 0.875}), 0.125);
  EXPECT_DOUBLE_EQ(ks_uniform_distance({1.0, 1.0}), 1.0);
  // sqrt(-log(0.005) / 2) = 1.6276
  EXPECT_NEAR(ks_critical_value(100, 0.01), 0.16276, 1e-5);
  EXPECT_NEAR(ks_critical_value(2000, 0.05), 1.3581 / std::sqrt(2000.0), 1e-5);
}
