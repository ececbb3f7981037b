#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsstilt/core.hpp"
#include "rsstilt/error.hpp"
#include "rsstilt/rng.hpp"

namespace rsstilt {

// p(s, r): probability that the s-th true order statistic is judged rank r.
// Rows and columns must each sum to one.
class MisrankMatrix {
 public:
  static constexpr double tolerance = 1e-9;

  MisrankMatrix(std::size_t k, std::vector<double> row_major) : k_(k), p_(std::move(row_major)) {
    if (k_ < 2 || p_.size() != k_ * k_) throw error(error_kind::dimension_mismatch, "misranking matrix must be k x k");
    for (double v : p_) {
      if (!(v >= 0.0 && v <= 1.0)) throw error(error_kind::not_doubly_stochastic, "entries must lie in [0,1]");
    }
    for (std::size_t i = 0; i < k_; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < k_; ++j) {
        row += (*this)(i, j);
        col += (*this)(j, i);
      }
      if (std::abs(row - 1.0) > tolerance || std::abs(col - 1.0) > tolerance) {
        throw error(error_kind::not_doubly_stochastic, "row and column sums must be 1");
      }
    }
  }

  static MisrankMatrix identity(std::size_t k) {
    std::vector<double> p(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) p[i * k + i] = 1.0;
    return MisrankMatrix(k, std::move(p));
  }

  static MisrankMatrix uniform(std::size_t k) {
    return MisrankMatrix(k, std::vector<double>(k * k, 1.0 / static_cast<double>(k)));
  }

  std::size_t k() const noexcept { return k_; }
  double operator()(std::size_t s, std::size_t r) const { return p_[s * k_ + r]; }

 private:
  std::size_t k_;
  std::vector<double> p_;
};

struct PopulationRecord {
  double y;
  double concomitant;
};

namespace detail {

inline double order_statistic(std::vector<double>& buf, std::size_t rank) {
  std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(rank), buf.end());
  return buf[rank];
}

inline std::vector<std::vector<double>> empty_rows(const Design& design) {
  std::vector<std::vector<double>> rows(design.k());
  for (std::size_t r = 0; r < design.k(); ++r) rows[r].resize(design.count(r));
  return rows;
}

}  // namespace detail

// Perfect ranking: each measurement is the rank-th order statistic of a
// fresh set of k draws. Substream per (rank, measurement index).
inline UrssSample draw_urss(const DistributionSpec& dist, const Design& design, const RngSeed& seed) {
  auto rows = detail::empty_rows(design);
  std::vector<double> set(design.k());
  for (std::size_t r = 0; r < design.k(); ++r) {
    for (std::size_t j = 0; j < design.count(r); ++j) {
      Engine g = substream(seed, r, j);
      VariateSampler draw(dist);
      for (double& x : set) x = draw(g);
      rows[r][j] = detail::order_statistic(set, r);
    }
  }
  return UrssSample(design, std::move(rows));
}

// Dell-Clutter judgment ranking: units are ranked on X + eps with
// eps ~ Normal(0, sigma_eps^2) and X of the judged rank-r unit is measured.
// The k values of X are drawn before any noise, so sigma_eps = 0 reproduces
// draw_urss exactly.
inline UrssSample draw_urss_imperfect(const DistributionSpec& dist, const Design& design, double sigma_eps,
                                      const RngSeed& seed) {
  if (!(sigma_eps >= 0.0) || !std::isfinite(sigma_eps)) {
    throw error(error_kind::negative_sigma, "sigma_eps must be finite and >= 0");
  }
  auto rows = detail::empty_rows(design);
  const std::size_t k = design.k();
  std::vector<double> x(k), judged(k);
  std::vector<std::size_t> order(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < design.count(r); ++j) {
      Engine g = substream(seed, r, j);
      VariateSampler draw(dist);
      for (double& v : x) v = draw(g);
      if (sigma_eps == 0.0) {
        judged = x;
      } else {
        std::normal_distribution<double> noise(0.0, sigma_eps);
        for (std::size_t i = 0; i < k; ++i) judged[i] = x[i] + noise(g);
      }
      for (std::size_t i = 0; i < k; ++i) order[i] = i;
      std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r), order.end(),
                       [&](std::size_t a, std::size_t b) { return judged[a] < judged[b]; });
      rows[r][j] = x[order[r]];
    }
  }
  return UrssSample(design, std::move(rows));
}

// Empirical corr(X, X + eps) over `pairs` draws of the ranking model above;
// for Normal X it approaches 1 / sqrt(1 + sigma_eps^2 / var X).
inline double ranking_correlation(const DistributionSpec& dist, double sigma_eps, std::size_t pairs,
                                  const RngSeed& seed) {
  if (!(sigma_eps >= 0.0) || !std::isfinite(sigma_eps)) {
    throw error(error_kind::negative_sigma, "sigma_eps must be finite and >= 0");
  }
  if (pairs < 2) throw error(error_kind::invalid_sample, "need at least two pairs");
  Engine g = substream(seed, 0);
  VariateSampler draw(dist);
  std::normal_distribution<double> noise(0.0, sigma_eps > 0.0 ? sigma_eps : 1.0);
  double mx = 0, my = 0, sxx = 0, syy = 0, sxy = 0;  // Welford updates
  for (std::size_t i = 1; i <= pairs; ++i) {
    const double x = draw(g);
    const double y = x + (sigma_eps > 0.0 ? noise(g) : 0.0);
    const double dx = x - mx, dy = y - my;
    mx += dx / static_cast<double>(i);
    my += dy / static_cast<double>(i);
    sxx += dx * (x - mx);
    syy += dy * (y - my);
    sxy += dx * (y - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Judged rank r measures the true s-th order statistic with probability
// p(s, r); column r is renormalized before the categorical draw.
inline UrssSample draw_urss_matrix(const DistributionSpec& dist, const Design& design, const MisrankMatrix& misrank,
                                   const RngSeed& seed) {
  const std::size_t k = design.k();
  if (misrank.k() != k) throw error(error_kind::dimension_mismatch, "misranking matrix size differs from set size");
  auto rows = detail::empty_rows(design);
  std::vector<double> set(k);
  for (std::size_t r = 0; r < k; ++r) {
    double column_total = 0.0;
    for (std::size_t s = 0; s < k; ++s) column_total += misrank(s, r);
    for (std::size_t j = 0; j < design.count(r); ++j) {
      Engine g = substream(seed, r, j);
      const double u = g.uniform() * column_total;
      std::size_t true_rank = k - 1;
      double acc = 0.0;
      for (std::size_t s = 0; s < k; ++s) {
        acc += misrank(s, r);
        if (u < acc) {
          true_rank = s;
          break;
        }
      }
      VariateSampler draw(dist);
      for (double& x : set) x = draw(g);
      rows[r][j] = detail::order_statistic(set, true_rank);
    }
  }
  return UrssSample(design, std::move(rows));
}

// Ranked set sampling from a finite population ranked on a concomitant.
// Each set is k distinct records; sets are independent of each other.
inline UrssSample draw_finite_population_rss(std::span<const PopulationRecord> population, const Design& design,
                                             const RngSeed& seed) {
  const std::size_t k = design.k();
  if (population.size() < k) {
    throw error(error_kind::population_too_small,
                "population of " + std::to_string(population.size()) + " is smaller than set size " + std::to_string(k));
  }
  auto rows = detail::empty_rows(design);
  std::vector<std::size_t> chosen(k), swaps(k);
  std::vector<std::size_t> all(population.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < design.count(r); ++j) {
      Engine g = substream(seed, r, j);
      // Partial Fisher-Yates, undone afterwards so every set starts from the
      // identity permutation and depends only on its own substream.
      for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
        swaps[i] = pick(g);
        std::swap(all[i], all[swaps[i]]);
        chosen[i] = all[i];
      }
      for (std::size_t i = k; i-- > 0;) std::swap(all[i], all[swaps[i]]);
      std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
        const double ca = population[a].concomitant, cb = population[b].concomitant;
        return ca < cb || (ca == cb && a < b);
      });
      rows[r][j] = population[chosen[r]].y;
    }
  }
  return UrssSample(design, std::move(rows));
}

// Adds c to every observation.
inline UrssSample shifted(const UrssSample& sample, double c) {
  auto rows = sample.rows();
  for (auto& row : rows) {
    for (double& x : row) x += c;
  }
  return UrssSample(sample.design(), std::move(rows));
}

}  // namespace rsstilt
