#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rsstilt/error.hpp"

namespace rsstilt {

struct ElResult {
  double statistic = 0.0;      // -2 log R(mu0)
  double lambda = 0.0;         // dual multiplier on the (x - mu0) scale
  bool hull_violation = false; // mu0 not strictly inside the convex hull
  std::vector<double> weights; // empty on hull violation
};

// Owen's empirical likelihood ratio for a mean. With z_i = x_i - mu0 the
// weights are 1 / (n (1 + lambda z_i)) where lambda solves
//   sum_i z_i / (1 + lambda z_i) = 0,
// the stationarity condition of the convex dual -sum_i log(1 + lambda z_i).
// The dual is self-concordant, so damped Newton (step scaled by
// 1 / (1 + decrement)) never leaves the domain.
inline ElResult el_mean_test(std::span<const double> x, double mu0) {
  const std::size_t n = x.size();
  if (n < 2) throw error(error_kind::degenerate_values, "need at least two values");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) throw error(error_kind::degenerate_values, "all values are equal");
  ElResult out;
  if (!(*lo < mu0 && mu0 < *hi)) {
    out.statistic = std::numeric_limits<double>::infinity();
    out.hull_violation = true;
    return out;
  }

  // Work on u = z / scale so the convergence threshold is scale-free.
  const double scale = std::max(std::abs(*lo - mu0), std::abs(*hi - mu0));
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (x[i] - mu0) / scale;

  constexpr double gradient_tolerance = 1e-10;
  constexpr int max_iterations = 500;
  double lambda = 0.0;
  int it = 0;
  for (; it < max_iterations; ++it) {
    double grad = 0.0, hess = 0.0;  // of the dual objective
    for (double ui : u) {
      const double d = 1.0 + lambda * ui;
      grad -= ui / d;
      hess += (ui * ui) / (d * d);
    }
    if (std::abs(grad) <= gradient_tolerance) break;
    const double step = -grad / hess;
    const double decrement = std::abs(step) * std::sqrt(hess);
    lambda += decrement < 0.25 ? step : step / (1.0 + decrement);
  }
  if (it == max_iterations) throw error(error_kind::no_convergence, "empirical likelihood multiplier did not converge");

  out.lambda = lambda / scale;
  out.weights.resize(n);
  double stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = 1.0 + lambda * u[i];
    stat += std::log(d);
    out.weights[i] = 1.0 / (static_cast<double>(n) * d);
  }
  out.statistic = 2.0 * stat;
  return out;
}

}  // namespace rsstilt
