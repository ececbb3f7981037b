#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "rsstilt/tilting.hpp"
#include "support.hpp"

using namespace rsstilt;

namespace {

// Tilted mean minus target, computed directly from the definition.
double naive_offset(const std::vector<double>& v, const std::vector<double>& base, double target, double lambda) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double e = base[i] * std::exp(lambda * v[i]);
    num += e * v[i];
    den += e;
  }
  return num / den - target;
}

// Brute force: bracket on the integers, then walk the bracket in 1e-6 steps
// and return the grid point with the smallest |offset|.
double grid_lambda(const std::vector<double>& v, const std::vector<double>& base, double target) {
  double a = 0.0;
  const double dir = naive_offset(v, base, target, 0.0) < 0.0 ? 1.0 : -1.0;
  while (naive_offset(v, base, target, a + dir) * naive_offset(v, base, target, a) > 0.0) a += dir;
  const double lo = std::min(a, a + dir);
  double best = lo, best_abs = INFINITY;
  for (int i = 0; i <= 1000000; ++i) {
    const double l = lo + i * 1e-6;
    const double d = std::abs(naive_offset(v, base, target, l));
    if (d < best_abs) best_abs = d, best = l;
  }
  return best;
}

// Values on a data-like scale (|target| well under 100) unless wide is set.
TiltProblem random_problem(std::mt19937_64& g, std::size_t max_n, bool uniform_base, bool wide = false) {
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  std::normal_distribution<double> z;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = size(g);
  const double scale = wide ? std::exp(3.0 * z(g)) : std::exp(std::clamp(z(g), -2.0, 2.0));
  const double center = wide ? 100.0 * z(g) : 2.0 * z(g);
  std::vector<double> v(n), base(n);
  for (auto& x : v) x = center + scale * z(g);
  for (auto& b : base) b = uniform_base ? 1.0 : 0.05 + u(g);
  const double total = std::accumulate(base.begin(), base.end(), 0.0);
  for (auto& b : base) b /= total;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (*lo == *hi) v[0] += scale;
  const auto [lo2, hi2] = std::minmax_element(v.begin(), v.end());
  const double target = *lo2 + (0.01 + 0.98 * u(g)) * (*hi2 - *lo2);
  return TiltProblem{v, base, target};
}

}  // namespace

TEST(SolveLambda, Examples) {
  EXPECT_EQ(solve_lambda(TiltProblem::uniform({1, 2, 3}, 2.0)), 0.0);
  EXPECT_NEAR(solve_lambda(TiltProblem::uniform({0, 1}, 0.75)), std::log(3.0), 1e-9);
  EXPECT_KIND(solve_lambda(TiltProblem::uniform({0, 1}, 1.0)), target_out_of_range);
  EXPECT_KIND(solve_lambda(TiltProblem::uniform({0, 1}, -0.5)), target_out_of_range);
  EXPECT_KIND(solve_lambda(TiltProblem::uniform({2, 2, 2}, 2.0)), degenerate_values);
}

TEST(SolveLambda, RejectsMalformedProblems) {
  EXPECT_KIND(solve_lambda(TiltProblem{{0, 1}, {1.0}, 0.5}), dimension_mismatch);
  EXPECT_KIND(solve_lambda(TiltProblem{{0, 1}, {0.7, 0.7}, 0.5}), invalid_weights);
  EXPECT_KIND(solve_lambda(TiltProblem{{0, 1}, {1.5, -0.5}, 0.5}), invalid_weights);
}

// Normalization and the mean constraint on random problems, including
// non-uniform base measures and targets close to the hull boundary.
TEST(SolveLambda, ResidualsOnRandomProblems) {
  std::mt19937_64 g(2024);
  double worst_norm = 0.0, worst_residual = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const TiltProblem p = random_problem(g, 60, trial % 2 == 0);
    const TiltWeights w = solve_tilt(p, TiltLevel::per_observation);
    const double total = std::accumulate(w.weights.begin(), w.weights.end(), 0.0);
    worst_norm = std::max(worst_norm, std::abs(total - 1.0));
    worst_residual = std::max(worst_residual, std::abs(weighted_mean(w.weights, p.values) - p.target));
    for (double x : w.weights) ASSERT_GE(x, 0.0);
  }
  EXPECT_LE(worst_norm, 1e-10);
  EXPECT_LE(worst_residual, 1e-8);
}

// Residual bound relative to the target on widely scaled problems.
TEST(SolveLambda, RelativeResidualOnWideProblems) {
  std::mt19937_64 g(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const TiltProblem p = random_problem(g, 60, trial % 2 == 0, true);
    const TiltWeights w = solve_tilt(p, TiltLevel::per_observation);
    ASSERT_LE(std::abs(weighted_mean(w.weights, p.values) - p.target), 1e-10 * (1.0 + std::abs(p.target)))
        << "trial " << trial;
  }
}

TEST(SolveLambda, AgreesWithGridSearch) {
  std::mt19937_64 g(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);  // 2..5 points
    std::vector<double> v(n), base(n);
    for (auto& x : v) x = 4.0 * u(g) - 2.0;
    for (auto& b : base) b = trial % 3 == 0 ? 1.0 : 0.2 + u(g);
    const double total = std::accumulate(base.begin(), base.end(), 0.0);
    for (auto& b : base) b /= total;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double target = *lo + (0.05 + 0.9 * u(g)) * (*hi - *lo);
    const double lambda = solve_lambda(TiltProblem{v, base, target});
    EXPECT_NEAR(lambda, grid_lambda(v, base, target), 1e-5) << "trial " << trial;
  }
}

TEST(SolveLambda, ZeroExactlyAtBaseMean) {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 200; ++trial) {
    TiltProblem p = random_problem(g, 20, trial % 2 == 0);
    p.target = weighted_mean(p.base_weights, p.values);
    EXPECT_EQ(solve_lambda(p), 0.0);
    const double spread = *std::max_element(p.values.begin(), p.values.end()) -
                          *std::min_element(p.values.begin(), p.values.end());
    p.target += 1e-3 * spread;
    EXPECT_GT(solve_lambda(p), 0.0);
    p.target -= 2e-3 * spread;
    EXPECT_LT(solve_lambda(p), 0.0);
  }
}

TEST(SolveLambda, StrictlyIncreasingInTarget) {
  std::mt19937_64 g(8);
  for (int trial = 0; trial < 50; ++trial) {
    TiltProblem p = random_problem(g, 30, false);
    const double lo = *std::min_element(p.values.begin(), p.values.end());
    const double hi = *std::max_element(p.values.begin(), p.values.end());
    double previous = -INFINITY;
    for (int i = 1; i < 50; ++i) {
      p.target = lo + (hi - lo) * i / 50.0;
      const double lambda = solve_lambda(p);
      EXPECT_GT(lambda, previous);
      previous = lambda;
    }
  }
}

TEST(SolveLambda, ShiftAndScaleInvariance) {
  std::mt19937_64 g(13);
  for (int trial = 0; trial < 200; ++trial) {
    const TiltProblem p = random_problem(g, 25, trial % 2 == 0);
    const TiltWeights w = solve_tilt(p, TiltLevel::per_observation);

    TiltProblem shifted = p;
    for (double& v : shifted.values) v += 3.7;
    shifted.target += 3.7;
    const TiltWeights ws = solve_tilt(shifted, TiltLevel::per_observation);
    // Each solve may miss its target by the solver tolerance; a target error
    // e moves weight i by about e |v_i - mean| / tilted variance.
    double var = 0.0, reach = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      var += w.weights[i] * (p.values[i] - p.target) * (p.values[i] - p.target);
      reach = std::max(reach, std::abs(p.values[i] - p.target));
    }
    auto weight_tol = [&](double target_tol) { return 4.0 * target_tol * reach / var + 1e-12; };
    const double tol_shift = lambda_tolerance(p.target) + lambda_tolerance(shifted.target);
    for (std::size_t i = 0; i < w.weights.size(); ++i) EXPECT_NEAR(ws.weights[i], w.weights[i], weight_tol(tol_shift));
    EXPECT_NEAR(ws.lambda, w.lambda, 4.0 * tol_shift / var + 1e-9);

    TiltProblem scaled = p;
    for (double& v : scaled.values) v *= 2.5;
    scaled.target *= 2.5;
    const TiltWeights wc = solve_tilt(scaled, TiltLevel::per_observation);
    const double tol_scale = lambda_tolerance(p.target) + lambda_tolerance(scaled.target) / 2.5;
    for (std::size_t i = 0; i < w.weights.size(); ++i) EXPECT_NEAR(wc.weights[i], w.weights[i], weight_tol(tol_scale));
    EXPECT_NEAR(wc.lambda * 2.5, w.lambda, 4.0 * tol_scale / var + 1e-9);
  }
}

TEST(SolveLambda, ExtremeTargetsStayFinite) {
  const auto p = TiltProblem::uniform({0.0, 1.0, 2.0, 1000.0}, 999.9);
  const TiltWeights w = solve_tilt(p, TiltLevel::per_observation);
  EXPECT_TRUE(std::isfinite(w.lambda));
  EXPECT_NEAR(weighted_mean(w.weights, p.values), 999.9, 1e-7);
  const auto q = TiltProblem::uniform({-1e6, 0.0, 1e6}, -999999.0);
  EXPECT_NEAR(weighted_mean(solve_tilt(q, TiltLevel::per_observation).weights, q.values), -999999.0, 1e-3);
}

TEST(LogNormalizer, MatchesDirectSum) {
  const auto p = TiltProblem::uniform({0.0, 1.0, 3.0}, 1.0);
  EXPECT_NEAR(log_normalizer(p, 0.7), std::log((1 + std::exp(0.7) + std::exp(2.1)) / 3.0), 1e-14);
  EXPECT_NEAR(log_normalizer(p, 400.0), 1200.0 + std::log(1.0 / 3.0), 1e-10);
}

TEST(EatWeights, Examples) {
  const UrssSample x({{1, 3}, {2, 6}});
  const TiltWeights w = eat_weights(x, 3.0);
  EXPECT_EQ(w.lambda, 0.0);
  for (double v : w.weights) EXPECT_DOUBLE_EQ(v, 0.25);
  const TiltWeights two = eat_weights(UrssSample({{0}, {1}}), 0.75);
  EXPECT_NEAR(two.weights[0], 0.25, 1e-10);
  EXPECT_NEAR(two.weights[1], 0.75, 1e-10);
  EXPECT_KIND(eat_weights(x, 7.0), target_out_of_range);
}

TEST(EarWeights, Examples) {
  const TiltWeights w = ear_weights(UrssSample({{1, 3}, {2, 6}}), 3.0);
  EXPECT_EQ(w.level, TiltLevel::per_row);
  EXPECT_DOUBLE_EQ(w.weights[0], 0.5);
  EXPECT_EQ(w.lambda, 0.0);
  const TiltWeights two = ear_weights(UrssSample({{0}, {1}}), 0.75);
  EXPECT_NEAR(two.weights[1], 0.75, 1e-10);

  // Row means (1, 5), target the pooled mean 1.8.
  const UrssSample u({{1, 1, 1, 1}, {5}});
  const TiltWeights wu = ear_weights(u, u.grand_mean());
  EXPECT_NEAR(wu.weights[0], 0.8, 1e-10);
  EXPECT_NEAR(wu.weights[1], 0.2, 1e-10);
  EXPECT_NEAR(wu.lambda, std::log(0.25) / 4.0, 1e-9);
}

TEST(RowEtWeights, Examples) {
  const UrssSample x({{2, 4}, {0, 1}, {5}});
  const TiltWeights a = row_et_weights(x, 0, 3.0);
  EXPECT_DOUBLE_EQ(a.weights[0], 0.5);
  const TiltWeights b = row_et_weights(x, 1, 0.25);
  EXPECT_NEAR(b.weights[0], 0.75, 1e-10);
  EXPECT_NEAR(b.lambda, std::log(1.0 / 3.0), 1e-9);
  EXPECT_KIND(row_et_weights(x, 2, 5.0), row_too_small);
}

TEST(EtDf, EatExamples) {
  const UrssSample x({{0, 2}, {4, 6, 8}});
  const TiltWeights uniform{TiltLevel::per_observation, std::vector<double>(5, 0.2), 0.0, 4.0};
  const WeightedDf f = et_df_eat(x, uniform), e = edf(x);
  for (double t = -1; t < 10; t += 0.5) EXPECT_DOUBLE_EQ(f(t), e(t));

  const UrssSample y({{0}, {1}});
  const WeightedDf g = et_df_eat(y, TiltWeights{TiltLevel::per_observation, {0.25, 0.75}, 0.0, 0.75});
  EXPECT_DOUBLE_EQ(g(0.0), 0.25);
  EXPECT_DOUBLE_EQ(g(1.0), 1.0);
  EXPECT_EQ(g(-0.1), 0.0);
  EXPECT_KIND(et_df_eat(y, TiltWeights{TiltLevel::per_row, {0.5, 0.5}, 0.0, 0.5}), weight_mismatch);
}

TEST(EtDf, EarExamples) {
  const UrssSample balanced({{1, 4}, {2, 7}, {3, 3}});
  const WeightedDf f = et_df_ear(balanced, TiltWeights{TiltLevel::per_row, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 0.0, 0.0});
  const WeightedDf e = edf(balanced);
  for (double t = 0; t < 8; t += 0.5) EXPECT_NEAR(f(t), e(t), 1e-15);

  const WeightedDf g = et_df_ear(UrssSample({{1, 1}, {9}}), TiltWeights{TiltLevel::per_row, {0.5, 0.5}, 0.0, 5.0});
  ASSERT_EQ(g.atoms().size(), 2u);
  EXPECT_DOUBLE_EQ(g.atoms()[0].support, 1.0);
  EXPECT_DOUBLE_EQ(g.atoms()[0].probability, 0.5);
  EXPECT_DOUBLE_EQ(g.atoms()[1].probability, 0.5);
  EXPECT_EQ(g(9.0), 1.0);
}

// The tilted distribution functions have the constrained mean.
TEST(EtDf, MeanEqualsTarget) {
  std::mt19937_64 g(21);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows{{z(g), z(g), z(g)}, {z(g)}, {z(g) + 1, z(g) + 1}};
    const UrssSample x(rows);
    const auto means = x.row_means();
    const double lo = std::max(x.min_value(), *std::min_element(means.begin(), means.end()));
    const double hi = std::min(x.max_value(), *std::max_element(means.begin(), means.end()));
    const double target = lo + 0.3 * (hi - lo);
    EXPECT_NEAR(et_df_eat(x, eat_weights(x, target)).mean(), target, 1e-9);
    EXPECT_NEAR(et_df_ear(x, ear_weights(x, target)).mean(), target, 1e-9);
  }
}

TEST(EtVariance, Examples) {
  EXPECT_EQ(et_variance(UrssSample({{2, 2}, {2}}), eat_weights(UrssSample({{1, 3}, {2}}), 2.0)), 0.0);
  EXPECT_DOUBLE_EQ(et_variance(UrssSample({{0}, {2}}), TiltWeights{TiltLevel::per_observation, {0.5, 0.5}, 0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(et_variance(UrssSample({{0}, {1}}), TiltWeights{TiltLevel::per_observation, {0.25, 0.75}, 0, 0.75}),
                   0.25);
}
