#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "rsstilt/core.hpp"
#include "rsstilt/error.hpp"
#include "rsstilt/hypothesis.hpp"
#include "rsstilt/rng.hpp"
#include "rsstilt/sampling.hpp"

namespace rsstilt {

// How the resampling methods (EAT, EAR, PB) reach a reject decision.
enum class BootstrapRule {
  p_value,        // bootstrap p-value, reject when p <= alpha
  percentile_ci,  // reject when the percentile CI of mu* - mu0 excludes 0
};

inline bool uses_interval(TestMethod m) {
  return m == TestMethod::eat || m == TestMethod::ear || m == TestMethod::pb;
}

struct StudyConfig {
  Design design = named_design(1);
  DistributionSpec dist = DistributionSpec::normal(0.0, 1.0);
  double mu0 = 0.0;
  double delta = 0.0;
  double sigma_eps = 0.0;
  std::vector<TestMethod> methods{TestMethod::pt, TestMethod::wt, TestMethod::eat, TestMethod::ear, TestMethod::pb};
  std::size_t B = 500;
  std::size_t replications = 2000;
  double alpha = 0.05;
  RngSeed seed{};
  Alternative alternative = Alternative::two_sided;
  BootstrapRule rule = BootstrapRule::p_value;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (replications < 1) throw error(error_kind::parse_error, "replications must be >= 1");
    if (B < 1) throw error(error_kind::parse_error, "B must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw error(error_kind::parse_error, "alpha must lie in (0,1)");
    if (!(sigma_eps >= 0.0)) throw error(error_kind::negative_sigma, "sigma_eps must be >= 0");
    if (methods.empty()) throw error(error_kind::parse_error, "no methods selected");
  }
};

struct MethodResult {
  TestMethod method;
  double rate = 0.0;           // over successful replications
  std::optional<double> se;    // sqrt(rate (1 - rate) / successes); absent below 2 successes
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::vector<double> p_values;  // in replication order; empty for CI decisions
};

struct StudyResult {
  StudyConfig config;
  std::vector<MethodResult> methods;

  const MethodResult& at(TestMethod m) const {
    for (const auto& r : methods) {
      if (r.method == m) return r;
    }
    throw error(error_kind::parse_error, "method not part of this study");
  }
};

struct ReplicationOutcome {
  bool ok = false;
  bool reject = false;
  double p_value = 1.0;
};

// Seeds: the sample of replication i comes from child_seed(seed, i, 0) and
// method m of that replication uses child_seed(seed, i, 1 + m). Seeds do not
// depend on which other methods run, so studies share data across methods.
inline UrssSample study_sample(const StudyConfig& c, std::size_t replication) {
  const RngSeed s = child_seed(c.seed, replication, 0);
  UrssSample x = c.sigma_eps > 0.0 ? draw_urss_imperfect(c.dist, c.design, c.sigma_eps, s) : draw_urss(c.dist, c.design, s);
  const double shift = c.mu0 + c.delta - c.dist.mean();
  return shift == 0.0 ? x : shifted(x, shift);
}

inline ReplicationOutcome run_method(const StudyConfig& c, const UrssSample& x, TestMethod m, std::size_t replication) {
  const RngSeed s = child_seed(c.seed, replication, 1 + static_cast<std::size_t>(m));
  ReplicationOutcome out;
  try {
    TestOutcome t;
    switch (m) {
      case TestMethod::pt: t = pt_test(x, c.mu0, c.alternative); break;
      case TestMethod::wt: t = wt_test(x, c.mu0, c.alternative); break;
      case TestMethod::pb:
        if (c.rule == BootstrapRule::percentile_ci) {
          out.ok = true;
          out.reject = parametric_ci_decision(x, c.mu0, c.dist.family(), c.B, s, 1.0 - c.alpha);
          return out;
        }
        t = parametric_bootstrap_test(x, c.mu0, c.dist.family(), c.B, s, c.alternative);
        break;
      case TestMethod::baklizi: t = baklizi_test(x, c.mu0); break;
      case TestMethod::liu: t = liu_el_test(x, c.mu0); break;
      case TestMethod::eat:
      case TestMethod::ear: {
        const auto method = m == TestMethod::eat ? ResampleMethod::eat : ResampleMethod::ear;
        if (c.rule == BootstrapRule::percentile_ci) {
          out.ok = true;
          out.reject = percentile_ci_decision(x, c.mu0, method, c.B, s, 1.0 - c.alpha);
          return out;
        }
        t = et_bootstrap_test(x, c.mu0, method, c.B, s, c.alternative);
        break;
      }
    }
    out.ok = true;
    out.p_value = t.p_value;
    out.reject = t.p_value <= c.alpha;
  } catch (const error&) {
    out.ok = false;
  }
  return out;
}

// Replications are independent; each worker claims indices from a shared
// counter and writes only its own slots, so the result does not depend on
// the worker count.
inline StudyResult run_study(const StudyConfig& config) {
  config.validate();
  const std::size_t R = config.replications;
  const std::size_t M = config.methods.size();
  std::vector<ReplicationOutcome> grid(R * M);

  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < R; i = next++) {
      const UrssSample x = study_sample(config, i);
      for (std::size_t j = 0; j < M; ++j) grid[i * M + j] = run_method(config, x, config.methods[j], i);
    }
  };

  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, R));
  std::atomic<std::size_t> next{0};
  if (workers <= 1) {
    work(next);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&] { work(next); });
  }

  StudyResult result{config, {}};
  for (std::size_t j = 0; j < M; ++j) {
    MethodResult mr{config.methods[j]};
    std::size_t rejections = 0;
    const bool keep_p = !(config.rule == BootstrapRule::percentile_ci && uses_interval(mr.method));
    for (std::size_t i = 0; i < R; ++i) {
      const auto& o = grid[i * M + j];
      if (!o.ok) {
        ++mr.failures;
        continue;
      }
      ++mr.successes;
      if (o.reject) ++rejections;
      if (keep_p) mr.p_values.push_back(o.p_value);
    }
    if (mr.successes > 0) {
      mr.rate = static_cast<double>(rejections) / static_cast<double>(mr.successes);
      if (mr.successes >= 2) mr.se = std::sqrt(mr.rate * (1.0 - mr.rate) / static_cast<double>(mr.successes));
    }
    result.methods.push_back(std::move(mr));
  }
  return result;
}

// Observed significance levels: no shift, bootstrap tests decide by p-value.
inline StudyResult run_size_study(StudyConfig config) {
  if (config.delta != 0.0) throw error(error_kind::parse_error, "size studies need delta = 0");
  config.rule = BootstrapRule::p_value;
  return run_study(config);
}

// Power under a location shift; EAT/EAR/PB decide by percentile interval.
inline StudyResult run_power_study(StudyConfig config) {
  config.rule = BootstrapRule::percentile_ci;
  return run_study(config);
}

// Dell-Clutter judgment ranking; size rules at delta = 0, power rules otherwise.
inline StudyResult run_imperfect_study(StudyConfig config) {
  if (!(config.sigma_eps > 0.0)) throw error(error_kind::negative_sigma, "imperfect studies need sigma_eps > 0");
  config.rule = config.delta == 0.0 ? BootstrapRule::p_value : BootstrapRule::percentile_ci;
  return run_study(config);
}

struct QqPoint {
  double uniform;  // plotting position (i - 0.5) / R
  double p_value;
};

// Sorted null p-values of one method against uniform plotting positions;
// R counts successful replications only.
inline std::vector<QqPoint> qq_pvalues(StudyConfig config, TestMethod method) {
  if (config.delta != 0.0) throw error(error_kind::parse_error, "Q-Q p-values need delta = 0");
  config.methods = {method};
  config.rule = BootstrapRule::p_value;
  auto result = run_study(config);
  auto p = std::move(result.methods.front().p_values);
  std::sort(p.begin(), p.end());
  std::vector<QqPoint> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = {(static_cast<double>(i) + 0.5) / static_cast<double>(p.size()), p[i]};
  }
  return out;
}

// Kolmogorov-Smirnov distance between sorted values and a continuous CDF.
template <class Cdf>
double ks_distance(std::vector<double> values, Cdf&& cdf) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

inline double ks_uniform_distance(std::vector<double> p) {
  return ks_distance(std::move(p), [](double x) { return std::clamp(x, 0.0, 1.0); });
}

// Large-sample one-sample KS critical value sqrt(-log(alpha/2) / 2) / sqrt(n).
inline double ks_critical_value(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace rsstilt
