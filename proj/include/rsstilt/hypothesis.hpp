#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "rsstilt/core.hpp"
#include "rsstilt/empirical_likelihood.hpp"
#include "rsstilt/error.hpp"
#include "rsstilt/resampling.hpp"
#include "rsstilt/rng.hpp"
#include "rsstilt/tilting.hpp"

namespace rsstilt {

enum class Alternative { greater, two_sided };

enum class TestMethod { pt, wt, eat, ear, pb, baklizi, liu };

inline std::string test_method_name(TestMethod m) {
  switch (m) {
    case TestMethod::pt: return "PT";
    case TestMethod::wt: return "WT";
    case TestMethod::eat: return "EAT";
    case TestMethod::ear: return "EAR";
    case TestMethod::pb: return "PB";
    case TestMethod::baklizi: return "Baklizi";
    case TestMethod::liu: return "Liu";
  }
  return "unknown";
}

inline TestMethod parse_test_method(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  if (name == "pt") return TestMethod::pt;
  if (name == "wt") return TestMethod::wt;
  if (name == "eat" || name == "ieat") return TestMethod::eat;
  if (name == "ear" || name == "iear") return TestMethod::ear;
  if (name == "pb") return TestMethod::pb;
  if (name == "baklizi") return TestMethod::baklizi;
  if (name == "liu") return TestMethod::liu;
  throw error(error_kind::parse_error, "unknown test method '" + name + "'");
}

struct TestOutcome {
  double statistic = 0.0;
  double p_value = 1.0;
  TestMethod method = TestMethod::pt;
  std::optional<double> df;
  std::optional<std::size_t> B;
  std::optional<RngSeed> seed;
  bool hull_violation = false;
};

namespace detail {

struct PtParts {
  double numerator;  // (1/k) sum_r (row mean_r - mu0)
  double se;         // S
};

inline PtParts pt_parts(const UrssSample& sample, double mu0) {
  const std::size_t k = sample.k();
  double num = 0.0, var = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    num += sample.row_mean(r) - mu0;
    var += sample.row_variance(r) / static_cast<double>(sample.design().count(r));
  }
  const double kd = static_cast<double>(k);
  return {num / kd, std::sqrt(var) / kd};
}

// Statistic for a bootstrap replicate. A replicate whose rows are all
// constant has S = 0; it is mapped to +-inf (or 0) so it still orders
// against the observed statistic instead of aborting the whole test.
inline double replicate_statistic(const UrssSample& sample, double center) {
  const auto p = pt_parts(sample, center);
  if (p.se > 0.0) return p.numerator / p.se;
  if (p.numerator > 0.0) return std::numeric_limits<double>::infinity();
  if (p.numerator < 0.0) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

inline void require_rows(const UrssSample& sample, std::size_t min_size) {
  for (std::size_t r = 0; r < sample.k(); ++r) {
    if (sample.design().count(r) < min_size) {
      throw error(error_kind::row_too_small, "row " + std::to_string(r + 1) + " has fewer than " +
                                                 std::to_string(min_size) + " values");
    }
  }
}

inline double normal_upper(double t) {
  return boost::math::cdf(boost::math::complement(boost::math::normal_distribution<double>(), t));
}

inline double chi2_upper(double x, double df) {
  if (std::isinf(x)) return 0.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(df), x));
}

// p-value from the replicate statistics. "greater" is the printed
// proportion #{T* > T} / B; two-sided is the equal-tailed version.
inline double bootstrap_p_value(const std::vector<double>& replicates, double observed, Alternative alt) {
  std::size_t above = 0, below = 0;
  for (double t : replicates) {
    if (t > observed) ++above;
    if (t < observed) ++below;
  }
  const double B = static_cast<double>(replicates.size());
  if (alt == Alternative::greater) return static_cast<double>(above) / B;
  return std::min(1.0, 2.0 * static_cast<double>(std::min(above, below)) / B);
}

}  // namespace detail

// T = (1/k) sum_r (row mean_r - mu0) / S with S^2 = (1/k^2) sum_r s_r^2 / m_r.
inline double pt_statistic(const UrssSample& sample, double mu0) {
  detail::require_rows(sample, 2);
  const auto p = detail::pt_parts(sample, mu0);
  if (!(p.se > 0.0)) throw error(error_kind::zero_variance, "every row is constant");
  return p.numerator / p.se;
}

inline TestOutcome pt_test(const UrssSample& sample, double mu0, Alternative alt = Alternative::greater) {
  TestOutcome out;
  out.method = TestMethod::pt;
  out.statistic = pt_statistic(sample, mu0);
  out.p_value = alt == Alternative::greater ? detail::normal_upper(out.statistic)
                                            : std::min(1.0, 2.0 * detail::normal_upper(std::abs(out.statistic)));
  return out;
}

// Welch-Satterthwaite degrees of freedom for T:
// (sum s_r^2/m_r)^2 / sum s_r^4 / (m_r^2 (m_r - 1)).
inline double welch_df(const UrssSample& sample) {
  detail::require_rows(sample, 2);
  double num = 0.0, den = 0.0;
  for (std::size_t r = 0; r < sample.k(); ++r) {
    const double m = static_cast<double>(sample.design().count(r));
    const double v = sample.row_variance(r);
    num += v / m;
    den += v * v / (m * m * (m - 1.0));
  }
  if (!(den > 0.0)) throw error(error_kind::zero_variance, "every row is constant");
  return num * num / den;
}

inline TestOutcome wt_test(const UrssSample& sample, double mu0, Alternative alt = Alternative::greater) {
  TestOutcome out;
  out.method = TestMethod::wt;
  out.statistic = pt_statistic(sample, mu0);
  const double df = welch_df(sample);
  out.df = df;
  const boost::math::students_t_distribution<double> t(df);
  const double upper = boost::math::cdf(boost::math::complement(t, out.statistic));
  const double abs_upper = boost::math::cdf(boost::math::complement(t, std::abs(out.statistic)));
  out.p_value = alt == Alternative::greater ? upper : std::min(1.0, 2.0 * abs_upper);
  return out;
}

// Bootstrap test with the null imposed by tilting to mu0:
// p = #{T*_b > T} / B with T*_b = T(X*_b, mu0).
inline TestOutcome et_bootstrap_test(const UrssSample& sample, double mu0, ResampleMethod method, std::size_t B,
                                     const RngSeed& seed, Alternative alt = Alternative::greater) {
  if (method == ResampleMethod::parametric) {
    throw error(error_kind::parse_error, "use parametric_bootstrap_test for the parametric bootstrap");
  }
  const double observed = pt_statistic(sample, mu0);
  const BootstrapBatch batch = method == ResampleMethod::eat ? bootstrap_eat(sample, eat_weights(sample, mu0), B, seed)
                                                             : bootstrap_ear(sample, ear_weights(sample, mu0), B, seed);
  std::vector<double> replicates(B);
  batch.for_each([&](std::size_t b, const UrssSample& x) { replicates[b] = detail::replicate_statistic(x, mu0); });

  TestOutcome out;
  out.method = method == ResampleMethod::eat ? TestMethod::eat : TestMethod::ear;
  out.statistic = observed;
  out.p_value = detail::bootstrap_p_value(replicates, observed, alt);
  out.B = B;
  out.seed = seed;
  return out;
}

// Parametric bootstrap: replicates come from the fitted law and are
// centered at its mean, T*_b = T(X*_b, mean of fitted law).
inline TestOutcome parametric_bootstrap_test(const UrssSample& sample, double mu0, Family family, std::size_t B,
                                             const RngSeed& seed, Alternative alt = Alternative::greater) {
  const double observed = pt_statistic(sample, mu0);
  const BootstrapBatch batch = parametric_bootstrap(sample, family, B, seed);
  const double center = sample.grand_mean();
  std::vector<double> replicates(B);
  batch.for_each([&](std::size_t b, const UrssSample& x) { replicates[b] = detail::replicate_statistic(x, center); });

  TestOutcome out;
  out.method = TestMethod::pb;
  out.statistic = observed;
  out.p_value = detail::bootstrap_p_value(replicates, observed, alt);
  out.B = B;
  out.seed = seed;
  return out;
}

struct PercentileInterval {
  double lower;
  double upper;
};

// Linear-interpolation sample quantile (type 7) of sorted data.
inline double sorted_quantile(const std::vector<double>& sorted, double prob) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

// Resamples for a percentile interval: EAT/EAR tilt at the pooled sample
// mean (no null imposed), the parametric bootstrap uses the fitted law.
inline BootstrapBatch interval_batch(const UrssSample& sample, ResampleMethod method, std::size_t B,
                                     const RngSeed& seed, Family family = Family::normal) {
  const double target = sample.grand_mean();
  const std::size_t k = sample.k();
  switch (method) {
    case ResampleMethod::eat: {
      // The pooled mean is the base mean, so the tilt is the identity.
      TiltWeights w{TiltLevel::per_observation,
                    std::vector<double>(sample.n(), 1.0 / static_cast<double>(sample.n())), 0.0, target};
      return bootstrap_eat(sample, w, B, seed);
    }
    case ResampleMethod::ear: {
      const auto means = sample.row_means();
      const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
      const TiltWeights w =
          *lo == *hi ? TiltWeights{TiltLevel::per_row, std::vector<double>(k, 1.0 / static_cast<double>(k)), 0.0, target}
                     : ear_weights(sample, target);
      return bootstrap_ear(sample, w, B, seed);
    }
    case ResampleMethod::parametric: return parametric_bootstrap(sample, family, B, seed);
  }
  throw error(error_kind::parse_error, "unknown resampling method");
}

// Percentile interval of mu-hat* = (1/k) sum_r row mean*_r.
inline PercentileInterval percentile_interval(const BootstrapBatch& batch, double level = 0.95) {
  if (!(level > 0.0 && level < 1.0)) throw error(error_kind::parse_error, "level must lie in (0,1)");
  std::vector<double> centers(batch.size());
  batch.for_each([&](std::size_t b, const UrssSample& x) {
    double s = 0.0;
    for (std::size_t r = 0; r < x.k(); ++r) s += x.row_mean(r);
    centers[b] = s / static_cast<double>(x.k());
  });
  std::sort(centers.begin(), centers.end());
  const double tail = 0.5 * (1.0 - level);
  return {sorted_quantile(centers, tail), sorted_quantile(centers, 1.0 - tail)};
}

inline bool interval_excludes(const PercentileInterval& ci, double mu0) {
  return ci.lower - mu0 > 0.0 || ci.upper - mu0 < 0.0;
}

// Rejects when the percentile interval of mu-hat* - mu0 excludes zero.
inline bool percentile_ci_decision(const UrssSample& sample, double mu0, ResampleMethod method, std::size_t B,
                                   const RngSeed& seed, double level = 0.95) {
  if (method == ResampleMethod::parametric) {
    throw error(error_kind::parse_error, "use parametric_ci_decision for the parametric bootstrap");
  }
  return interval_excludes(percentile_interval(interval_batch(sample, method, B, seed), level), mu0);
}

// Same decision with resamples from the fitted parametric law.
inline bool parametric_ci_decision(const UrssSample& sample, double mu0, Family family, std::size_t B,
                                   const RngSeed& seed, double level = 0.95) {
  return interval_excludes(
      percentile_interval(interval_batch(sample, ResampleMethod::parametric, B, seed, family), level), mu0);
}

inline void require_balanced(const UrssSample& sample) {
  if (!sample.design().balanced()) throw error(error_kind::unbalanced_design, "test requires a balanced design");
}

// C0 * l(mu0) referred to chi-square(1); row variances estimate sigma_r^2.
inline TestOutcome baklizi_test(const UrssSample& sample, double mu0) {
  require_balanced(sample);
  detail::require_rows(sample, 2);
  double sum_dev = 0.0, sum_sq = 0.0;
  for (const auto& row : sample.rows()) {
    for (double x : row) {
      sum_dev += x - mu0;
      sum_sq += (x - mu0) * (x - mu0);
    }
  }
  double within = 0.0, between = 0.0;
  for (std::size_t r = 0; r < sample.k(); ++r) {
    within += sample.row_variance(r);
    const double d = sample.row_mean(r) - mu0;
    between += d * d;
  }
  if (!(within > 0.0) || !(sum_sq > 0.0)) throw error(error_kind::zero_variance, "every row is constant");
  const double l = sum_dev * sum_dev / sum_sq;
  const double c0 = (within + between) / within;

  TestOutcome out;
  out.method = TestMethod::baklizi;
  out.statistic = c0 * l;
  out.p_value = detail::chi2_upper(out.statistic, 1.0);
  return out;
}

// Cycle j averages the j-th measurement of every rank.
inline std::vector<double> cycle_means(const UrssSample& sample) {
  require_balanced(sample);
  const std::size_t m = sample.design().count(0);
  std::vector<double> out(m, 0.0);
  for (const auto& row : sample.rows()) {
    for (std::size_t j = 0; j < m; ++j) out[j] += row[j];
  }
  for (double& v : out) v /= static_cast<double>(sample.k());
  return out;
}

// Empirical likelihood on the i.i.d. cycle means. When mu0 is outside their
// convex hull the ratio is zero: p = 0 and hull_violation is set.
inline TestOutcome liu_el_test(const UrssSample& sample, double mu0) {
  const auto means = cycle_means(sample);
  const ElResult el = el_mean_test(means, mu0);
  TestOutcome out;
  out.method = TestMethod::liu;
  out.statistic = el.statistic;
  out.hull_violation = el.hull_violation;
  out.p_value = el.hull_violation ? 0.0 : detail::chi2_upper(el.statistic, 1.0);
  return out;
}

}  // namespace rsstilt
