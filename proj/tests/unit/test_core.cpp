#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/distributions/logistic.hpp>
#include <boost/math/distributions/normal.hpp>

#include "rsstilt/core.hpp"
#include "rsstilt/rng.hpp"
#include "support.hpp"

using namespace rsstilt;

TEST(Design, CountsAndShares) {
  const Design d({8, 3, 3, 2, 4});
  EXPECT_EQ(d.k(), 5u);
  EXPECT_EQ(d.n(), 20u);
  EXPECT_DOUBLE_EQ(d.share(0), 0.4);
  EXPECT_FALSE(d.balanced());
  EXPECT_EQ(d.min_count(), 2u);
  EXPECT_TRUE(Design({2, 2, 2}).balanced());
}

TEST(Design, RejectsTooFewRanksOrEmptyRanks) {
  EXPECT_KIND(Design({5}), invalid_design);
  EXPECT_KIND(Design({}), invalid_design);
  EXPECT_KIND(Design({3, 0, 2}), invalid_design);
}

TEST(Design, NamedDesigns) {
  const std::vector<std::vector<std::size_t>> want{
      {5, 5, 5, 5, 5}, {8, 3, 3, 2, 4}, {3, 2, 5, 8, 3}, {3, 10, 3, 3, 3}, {4, 2, 3, 3, 8}, {2, 2, 2, 2, 2}};
  const std::vector<std::size_t> sizes{25, 20, 21, 22, 20, 10};
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(named_design(i).counts(), want[static_cast<std::size_t>(i - 1)]) << "D" << i;
    EXPECT_EQ(named_design(i).n(), sizes[static_cast<std::size_t>(i - 1)]) << "D" << i;
  }
  EXPECT_KIND(named_design(7), invalid_design);
}

TEST(UrssSample, Summaries) {
  const UrssSample x({{1.0, 3.0}, {2.0, 6.0}});
  EXPECT_EQ(x.design().counts(), (std::vector<std::size_t>{2, 2}));
  EXPECT_DOUBLE_EQ(x.row_mean(0), 2.0);
  EXPECT_DOUBLE_EQ(x.row_mean(1), 4.0);
  EXPECT_DOUBLE_EQ(x.row_variance(0), 2.0);
  EXPECT_DOUBLE_EQ(x.row_variance(1), 8.0);
  EXPECT_DOUBLE_EQ(x.grand_mean(), 3.0);
  EXPECT_EQ(x.values(), (std::vector<double>{1, 3, 2, 6}));
  EXPECT_DOUBLE_EQ(x.min_value(), 1.0);
  EXPECT_DOUBLE_EQ(x.max_value(), 6.0);
}

TEST(UrssSample, UnbalancedGrandMeanPoolsObservations) {
  const UrssSample x({{1, 1, 1, 1}, {5}});
  EXPECT_DOUBLE_EQ(x.grand_mean(), 1.8);
  EXPECT_KIND(x.row_variance(1), row_too_small);
}

TEST(UrssSample, RejectsShapeMismatchAndNonFinite) {
  EXPECT_KIND(UrssSample(Design({2, 2}), {{1.0, 2.0}, {3.0}}), invalid_sample);
  EXPECT_KIND(UrssSample(Design({1, 1}), {{1.0}}), invalid_sample);
  EXPECT_KIND(UrssSample({{1.0}, {NAN}}), invalid_sample);
  EXPECT_KIND(UrssSample({{1.0}, {}}), invalid_design);
}

TEST(WeightedDf, StepFunctionExamples) {
  const WeightedDf f({{1, 0.5}, {2, 0.5}});
  EXPECT_EQ(f(0.9), 0.0);
  EXPECT_EQ(f(1.0), 0.5);
  EXPECT_EQ(f(2.0), 1.0);
  const WeightedDf g({{2, 0.7}, {1, 0.3}});
  EXPECT_DOUBLE_EQ(g(1.5), 0.3);
  EXPECT_DOUBLE_EQ(g.mean(), 1.7);
}

TEST(WeightedDf, MergesTiedSupport) {
  const WeightedDf f({{1, 0.25}, {9, 0.5}, {1, 0.25}});
  ASSERT_EQ(f.atoms().size(), 2u);
  EXPECT_DOUBLE_EQ(f.atoms()[0].probability, 0.5);
}

TEST(WeightedDf, RejectsBadMasses) {
  EXPECT_KIND(WeightedDf({{1, 0.5}, {2, 0.4}}), invalid_weights);
  EXPECT_KIND(WeightedDf({{1, 1.5}, {2, -0.5}}), invalid_weights);
  EXPECT_KIND(WeightedDf({}), invalid_weights);
}

TEST(Edf, Examples) {
  const WeightedDf a = edf(UrssSample({{1}, {2}}));
  ASSERT_EQ(a.atoms().size(), 2u);
  EXPECT_DOUBLE_EQ(a.atoms()[0].probability, 0.5);
  EXPECT_EQ(eval_df(edf(UrssSample({{1, 1}, {1}})), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(eval_df(edf(UrssSample({{0, 2}, {4, 6, 8}})), 3.0), 0.4);
}

// Nondecreasing, right-continuous, limits 0 and 1, checked on a grid that
// straddles every atom.
TEST(Edf, StepFunctionProperties) {
  std::mt19937_64 g(3);
  std::normal_distribution<double> z;
  std::uniform_int_distribution<int> len(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<double>> rows(3);
    for (auto& row : rows) {
      row.resize(static_cast<std::size_t>(len(g)));
      for (double& v : row) v = std::round(z(g) * 4.0) / 4.0;  // coarse grid forces ties
    }
    const UrssSample x(rows);
    const WeightedDf f = edf(x);
    auto support = x.values();
    std::sort(support.begin(), support.end());
    const auto all = support;
    support.erase(std::unique(support.begin(), support.end()), support.end());
    EXPECT_EQ(f(support.front() - 1.0), 0.0);
    EXPECT_EQ(f(support.back()), 1.0);
    EXPECT_EQ(f(support.back() + 1.0), 1.0);
    double last = 0.0;
    for (double s : support) {
      const double below = f(std::nextafter(s, -INFINITY));
      const double at = f(s);
      const double count = static_cast<double>(std::count_if(all.begin(), all.end(), [&](double v) { return v <= s; }));
      EXPECT_NEAR(at, count / static_cast<double>(all.size()), 1e-12);
      EXPECT_GE(below, last - 1e-15);
      EXPECT_GT(at, below);
      EXPECT_EQ(f(s + 1e-12 * (1.0 + std::abs(s))), at);  // right limit
      last = at;
    }
  }
}

TEST(DistributionSpec, CdfAgreesWithReferenceImplementation) {
  const auto n = DistributionSpec::normal(0.3, 2.0);
  const auto l = DistributionSpec::logistic(1.0, 0.5);
  const auto e = DistributionSpec::exponential(2.0);
  const boost::math::normal_distribution<double> bn(0.3, 2.0);
  const boost::math::logistic_distribution<double> bl(1.0, 0.5);
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    EXPECT_NEAR(n.cdf(x), boost::math::cdf(bn, x), 1e-14);
    EXPECT_NEAR(l.cdf(x), boost::math::cdf(bl, x), 1e-14);
    EXPECT_NEAR(e.cdf(x), x <= 0 ? 0.0 : 1.0 - std::exp(-x / 2.0), 1e-14);
  }
}

TEST(DistributionSpec, ValidatesParameters) {
  EXPECT_KIND(DistributionSpec::normal(0, 0), invalid_distribution);
  EXPECT_KIND(DistributionSpec::normal(0, -1), invalid_distribution);
  EXPECT_KIND(DistributionSpec::exponential(0), invalid_distribution);
  EXPECT_KIND(DistributionSpec::logistic(0, 0), invalid_distribution);
  EXPECT_KIND(DistributionSpec::normal(NAN, 1), invalid_distribution);
}

TEST(DistributionSpec, SampleMomentsMatch) {
  Engine g(99);
  for (const auto& d : {DistributionSpec::normal(1.0, 2.0), DistributionSpec::exponential(3.0),
                        DistributionSpec::logistic(-1.0, 1.0)}) {
    VariateSampler draw(d);
    double s = 0.0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) s += draw(g);
    // sd of each family here is at most 3 (exponential), pi/sqrt(3) (logistic)
    EXPECT_NEAR(s / N, d.mean(), 4.0 * 3.0 / std::sqrt(N)) << d.describe();
  }
}

TEST(DistributionSpec, FamilyNames) {
  EXPECT_EQ(parse_family("Normal"), Family::normal);
  EXPECT_EQ(parse_family("exponential"), Family::exponential);
  EXPECT_EQ(parse_family("logistic"), Family::logistic);
  EXPECT_KIND(parse_family("cauchy"), invalid_distribution);
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  const RngSeed s{42, 0};
  Engine a = substream(s, 3, 1), b = substream(s, 3, 1), c = substream(s, 1, 3);
  const auto x = a(), y = b(), z = c();
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  EXPECT_NE(child_seed(s, 1), child_seed(s, 2));
  EXPECT_EQ(child_seed(s, 1), child_seed(s, 1));
}

TEST(Rng, UniformInUnitInterval) {
  Engine g(1);
  double lo = 1, hi = 0, sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = g.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}
