#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rsstilt/core.hpp"
#include "rsstilt/error.hpp"

namespace rsstilt {

// Exponential tilting of a discrete reference measure under a mean constraint.
//
// Minimizing sum_i p_i log(p_i / base_i) subject to sum_i p_i = 1 and
// sum_i p_i v_i = target gives p_i proportional to base_i exp(lambda v_i),
// where lambda solves the scalar equation
//
//   g(lambda) = sum_i p_i(lambda) (v_i - target) = 0.
//
// g is smooth with g'(lambda) equal to the tilted variance of v, so it is
// strictly increasing whenever the values are not all equal and the root is
// unique. The normalizing multiplier is eliminated analytically.
struct TiltProblem {
  std::vector<double> values;
  std::vector<double> base_weights;
  double target = 0.0;

  static TiltProblem uniform(std::vector<double> values, double target) {
    const std::size_t n = values.size();
    std::vector<double> base(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
    return TiltProblem{std::move(values), std::move(base), target};
  }
};

enum class TiltLevel { per_observation, per_row };

struct TiltWeights {
  TiltLevel level = TiltLevel::per_observation;
  std::vector<double> weights;
  double lambda = 0.0;
  double target = 0.0;
};

inline constexpr int max_lambda_iterations = 200;

namespace detail {

struct TiltMoments {
  double mean_offset;  // tilted mean of (v - target)
  double variance;     // tilted variance of v
};

// Moments of the tilted law at lambda, using the log-sum-exp shift.
inline TiltMoments tilt_moments(std::span<const double> centered, std::span<const double> base, double lambda) {
  double shift = -std::numeric_limits<double>::infinity();
  for (double z : centered) shift = std::max(shift, lambda * z);
  double total = 0.0, first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < centered.size(); ++i) {
    const double w = base[i] * std::exp(lambda * centered[i] - shift);
    total += w;
    first += w * centered[i];
    second += w * centered[i] * centered[i];
  }
  const double m = first / total;
  return {m, std::max(second / total - m * m, 0.0)};
}

inline void validate(const TiltProblem& p) {
  if (p.values.size() != p.base_weights.size()) {
    throw error(error_kind::dimension_mismatch, "values and base weights differ in length");
  }
  if (p.values.size() < 2) throw error(error_kind::degenerate_values, "need at least two values to tilt");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (!std::isfinite(p.values[i])) throw error(error_kind::invalid_sample, "non-finite value");
    if (!(p.base_weights[i] > 0.0)) throw error(error_kind::invalid_weights, "base weights must be positive");
    sum += p.base_weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-10) throw error(error_kind::invalid_weights, "base weights must sum to 1");
  if (!std::isfinite(p.target)) throw error(error_kind::target_out_of_range, "non-finite target");
}

}  // namespace detail

// Residual tolerance on |tilted mean - target|.
inline double lambda_tolerance(double target) { return 1e-10 * (1.0 + std::abs(target)); }

inline double solve_lambda(const TiltProblem& problem) {
  detail::validate(problem);
  const auto [lo_it, hi_it] = std::minmax_element(problem.values.begin(), problem.values.end());
  const double vmin = *lo_it, vmax = *hi_it;
  if (vmin == vmax) throw error(error_kind::degenerate_values, "all values are equal");
  if (!(vmin < problem.target && problem.target < vmax)) {
    throw error(error_kind::target_out_of_range,
                "target " + std::to_string(problem.target) + " outside (" + std::to_string(vmin) + ", " +
                    std::to_string(vmax) + ")");
  }

  std::vector<double> centered(problem.values.size());
  for (std::size_t i = 0; i < centered.size(); ++i) centered[i] = problem.values[i] - problem.target;
  const std::span<const double> z(centered), base(problem.base_weights);
  const double tol = lambda_tolerance(problem.target);

  auto g = [&](double lambda) { return detail::tilt_moments(z, base, lambda); };

  int iterations = 0;
  auto at0 = g(0.0);
  if (std::abs(at0.mean_offset) <= tol) return 0.0;

  // Bracket the root: g(lo) < 0 < g(hi), growing geometrically from [-1, 1].
  double lo = 0.0, hi = 0.0;
  if (at0.mean_offset > 0.0) {
    lo = -1.0;
    while (g(lo).mean_offset > 0.0) {
      hi = lo;
      lo *= 2.0;
      if (++iterations >= max_lambda_iterations) throw error(error_kind::no_convergence, "could not bracket lambda");
    }
  } else {
    hi = 1.0;
    while (g(hi).mean_offset < 0.0) {
      lo = hi;
      hi *= 2.0;
      if (++iterations >= max_lambda_iterations) throw error(error_kind::no_convergence, "could not bracket lambda");
    }
  }

  // Safeguarded Newton: take the Newton step when it stays inside the
  // bracket, otherwise bisect. The bracket shrinks on every evaluation.
  double x = 0.5 * (lo + hi);
  double previous_step = hi - lo;
  for (; iterations < max_lambda_iterations; ++iterations) {
    const auto m = g(x);
    if (std::abs(m.mean_offset) <= tol) return x;
    if (m.mean_offset < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - m.mean_offset / m.variance;
    const bool newton_ok = m.variance > 0.0 && next > lo && next < hi &&
                           std::abs(next - x) < 0.5 * previous_step;
    if (!newton_ok) next = 0.5 * (lo + hi);
    previous_step = std::abs(next - x);
    if (next == x) break;
    x = next;
  }
  throw error(error_kind::no_convergence, "lambda iteration cap reached");
}

// log sum_i base_i exp(lambda v_i)
inline double log_normalizer(const TiltProblem& problem, double lambda) {
  double shift = -std::numeric_limits<double>::infinity();
  for (double v : problem.values) shift = std::max(shift, lambda * v);
  double s = 0.0;
  for (std::size_t i = 0; i < problem.values.size(); ++i) {
    s += problem.base_weights[i] * std::exp(lambda * problem.values[i] - shift);
  }
  return shift + std::log(s);
}

// Tilted probabilities base_i exp(lambda v_i) / sum_j base_j exp(lambda v_j).
inline std::vector<double> tilted_weights(const TiltProblem& problem, double lambda) {
  double shift = -std::numeric_limits<double>::infinity();
  for (double v : problem.values) shift = std::max(shift, lambda * (v - problem.target));
  std::vector<double> w(problem.values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = problem.base_weights[i] * std::exp(lambda * (problem.values[i] - problem.target) - shift);
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

inline TiltWeights solve_tilt(const TiltProblem& problem, TiltLevel level) {
  const double lambda = solve_lambda(problem);
  return TiltWeights{level, tilted_weights(problem, lambda), lambda, problem.target};
}

// Tilted mean of the constrained values under the given weights.
inline double weighted_mean(std::span<const double> weights, std::span<const double> values) {
  if (weights.size() != values.size()) throw error(error_kind::weight_mismatch, "length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) m += weights[i] * values[i];
  return m;
}

// Per-observation weights over the pooled sample with base 1/n.
inline TiltWeights eat_weights(const UrssSample& sample, double target) {
  return solve_tilt(TiltProblem::uniform(sample.values(), target), TiltLevel::per_observation);
}

// Per-row weights on the row means with base 1/k.
inline TiltWeights ear_weights(const UrssSample& sample, double target) {
  return solve_tilt(TiltProblem::uniform(sample.row_means(), target), TiltLevel::per_row);
}

// Weights within a single row, treating it as a simple random sample.
inline TiltWeights row_et_weights(const UrssSample& sample, std::size_t rank, double target) {
  auto row = sample.row(rank);
  if (row.size() < 2) {
    throw error(error_kind::row_too_small, "row " + std::to_string(rank + 1) + " needs at least 2 values");
  }
  return solve_tilt(TiltProblem::uniform(std::vector<double>(row.begin(), row.end()), target),
                    TiltLevel::per_observation);
}

inline WeightedDf et_df_eat(const UrssSample& sample, const TiltWeights& weights) {
  if (weights.level != TiltLevel::per_observation || weights.weights.size() != sample.n()) {
    throw error(error_kind::weight_mismatch, "expected one weight per observation");
  }
  std::vector<Atom> atoms;
  atoms.reserve(sample.n());
  std::size_t i = 0;
  for (const auto& row : sample.rows()) {
    for (double x : row) atoms.push_back({x, weights.weights[i++]});
  }
  return WeightedDf(std::move(atoms));
}

// Observation j of row r carries mass p_r / m_r.
inline WeightedDf et_df_ear(const UrssSample& sample, const TiltWeights& row_weights) {
  if (row_weights.level != TiltLevel::per_row || row_weights.weights.size() != sample.k()) {
    throw error(error_kind::weight_mismatch, "expected one weight per row");
  }
  std::vector<Atom> atoms;
  atoms.reserve(sample.n());
  for (std::size_t r = 0; r < sample.k(); ++r) {
    const double mass = row_weights.weights[r] / static_cast<double>(sample.design().count(r));
    for (double x : sample.row(r)) atoms.push_back({x, mass});
  }
  return WeightedDf(std::move(atoms));
}

// Weighted spread about the pooled sample mean (not the tilted mean).
inline double et_variance(const UrssSample& sample, const TiltWeights& weights) {
  if (weights.level != TiltLevel::per_observation || weights.weights.size() != sample.n()) {
    throw error(error_kind::weight_mismatch, "expected one weight per observation");
  }
  const double mean = sample.grand_mean();
  double s = 0.0;
  std::size_t i = 0;
  for (const auto& row : sample.rows()) {
    for (double x : row) {
      s += weights.weights[i++] * (x - mean) * (x - mean);
    }
  }
  return s;
}

}  // namespace rsstilt
