#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsstilt/alias_table.hpp"
#include "rsstilt/core.hpp"
#include "rsstilt/error.hpp"
#include "rsstilt/rng.hpp"
#include "rsstilt/sampling.hpp"
#include "rsstilt/tilting.hpp"

namespace rsstilt {

enum class ResampleMethod { eat, ear, parametric };

inline std::string method_name(ResampleMethod m) {
  switch (m) {
    case ResampleMethod::eat: return "EAT";
    case ResampleMethod::ear: return "EAR";
    case ResampleMethod::parametric: return "PB";
  }
  return "unknown";
}

// Draws slot (r, j) as the r-th order statistic of k draws from the tilted
// pooled sample.
class EatResampler {
 public:
  EatResampler(const UrssSample& sample, const TiltWeights& weights)
      : design_(sample.design()), values_(sample.values()), table_(checked(sample, weights)) {}

  UrssSample draw(Engine& g) const {
    const std::size_t k = design_.k();
    std::vector<std::vector<double>> rows(k);
    std::vector<double> set(k);
    for (std::size_t r = 0; r < k; ++r) {
      rows[r].resize(design_.count(r));
      for (double& slot : rows[r]) {
        for (double& x : set) x = values_[table_(g)];
        std::nth_element(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(r), set.end());
        slot = set[r];
      }
    }
    return UrssSample(design_, std::move(rows));
  }

  const Design& design() const noexcept { return design_; }

 private:
  static std::span<const double> checked(const UrssSample& sample, const TiltWeights& w) {
    if (w.level != TiltLevel::per_observation || w.weights.size() != sample.n()) {
      throw error(error_kind::weight_mismatch,
                  "EAT needs " + std::to_string(sample.n()) + " observation weights, got " + std::to_string(w.weights.size()));
    }
    return w.weights;
  }

  Design design_;
  std::vector<double> values_;
  AliasTable table_;
};

// Each of the k picks chooses a row by its tilted weight, then an
// observation uniformly within that row.
class EarResampler {
 public:
  EarResampler(const UrssSample& sample, const TiltWeights& row_weights)
      : design_(sample.design()), rows_(sample.rows()), table_(checked(sample, row_weights)) {}

  // A single pre-sorting pick: (row, index within row).
  std::pair<std::size_t, std::size_t> pick(Engine& g) const {
    const std::size_t s = table_(g);
    const std::size_t m = rows_[s].size();
    std::size_t j = static_cast<std::size_t>(g.uniform() * static_cast<double>(m));
    if (j >= m) j = m - 1;
    return {s, j};
  }

  UrssSample draw(Engine& g) const {
    const std::size_t k = design_.k();
    std::vector<std::vector<double>> rows(k);
    std::vector<double> set(k);
    for (std::size_t r = 0; r < k; ++r) {
      rows[r].resize(design_.count(r));
      for (double& slot : rows[r]) {
        for (double& x : set) {
          const auto [s, j] = pick(g);
          x = rows_[s][j];
        }
        std::nth_element(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(r), set.end());
        slot = set[r];
      }
    }
    return UrssSample(design_, std::move(rows));
  }

  const Design& design() const noexcept { return design_; }

 private:
  static std::span<const double> checked(const UrssSample& sample, const TiltWeights& w) {
    if (w.level != TiltLevel::per_row || w.weights.size() != sample.k()) {
      throw error(error_kind::weight_mismatch,
                  "EAR needs " + std::to_string(sample.k()) + " row weights, got " + std::to_string(w.weights.size()));
    }
    return w.weights;
  }

  Design design_;
  std::vector<std::vector<double>> rows_;
  AliasTable table_;
};

// Fitted law for the parametric bootstrap: location from the pooled sample
// mean, unit scale.
inline DistributionSpec fit_parametric(const UrssSample& sample, Family family) {
  const double mean = sample.grand_mean();
  switch (family) {
    case Family::normal: return DistributionSpec::normal(mean, 1.0);
    case Family::logistic: return DistributionSpec::logistic(mean, 1.0);
    case Family::exponential:
      if (!(mean > 0.0)) {
        throw error(error_kind::non_positive_mean, "exponential fit needs a positive sample mean, got " + std::to_string(mean));
      }
      return DistributionSpec::exponential(mean);
  }
  throw error(error_kind::invalid_distribution, "unknown family");
}

class ParametricResampler {
 public:
  ParametricResampler(const UrssSample& sample, Family family)
      : design_(sample.design()), fitted_(fit_parametric(sample, family)) {}

  UrssSample draw(const RngSeed& seed) const { return draw_urss(fitted_, design_, seed); }

  const DistributionSpec& fitted() const noexcept { return fitted_; }
  const Design& design() const noexcept { return design_; }

 private:
  Design design_;
  DistributionSpec fitted_;
};

// B resamples generated lazily from per-index substreams, so resample(b) is
// the same whether members are produced in order, in parallel or singly.
class BootstrapBatch {
 public:
  BootstrapBatch(EatResampler gen, std::size_t B, RngSeed seed)
      : method_(ResampleMethod::eat), B_(checked_count(B)), seed_(seed), gen_(std::move(gen)) {}
  BootstrapBatch(EarResampler gen, std::size_t B, RngSeed seed)
      : method_(ResampleMethod::ear), B_(checked_count(B)), seed_(seed), gen_(std::move(gen)) {}
  BootstrapBatch(ParametricResampler gen, std::size_t B, RngSeed seed)
      : method_(ResampleMethod::parametric), B_(checked_count(B)), seed_(seed), gen_(std::move(gen)) {}

  ResampleMethod method() const noexcept { return method_; }
  std::size_t size() const noexcept { return B_; }
  const RngSeed& seed() const noexcept { return seed_; }

  UrssSample resample(std::size_t b) const {
    return std::visit(
        [&](const auto& gen) -> UrssSample {
          if constexpr (std::is_same_v<std::decay_t<decltype(gen)>, ParametricResampler>) {
            return gen.draw(child_seed(seed_, b));
          } else {
            Engine g = substream(seed_, b);
            return gen.draw(g);
          }
        },
        gen_);
  }

  std::vector<UrssSample> materialize() const {
    std::vector<UrssSample> out;
    out.reserve(B_);
    for (std::size_t b = 0; b < B_; ++b) out.push_back(resample(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < B_; ++b) f(b, resample(b));
  }

 private:
  static std::size_t checked_count(std::size_t B) {
    if (B == 0) throw error(error_kind::invalid_sample, "B must be positive");
    return B;
  }

  ResampleMethod method_;
  std::size_t B_;
  RngSeed seed_;
  std::variant<EatResampler, EarResampler, ParametricResampler> gen_;
};

inline BootstrapBatch bootstrap_eat(const UrssSample& sample, const TiltWeights& weights, std::size_t B,
                                   const RngSeed& seed) {
  return BootstrapBatch(EatResampler(sample, weights), B, seed);
}

inline BootstrapBatch bootstrap_ear(const UrssSample& sample, const TiltWeights& row_weights, std::size_t B,
                                   const RngSeed& seed) {
  return BootstrapBatch(EarResampler(sample, row_weights), B, seed);
}

inline BootstrapBatch parametric_bootstrap(const UrssSample& sample, Family family, std::size_t B,
                                           const RngSeed& seed) {
  return BootstrapBatch(ParametricResampler(sample, family), B, seed);
}

}  // namespace rsstilt
