#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsstilt/error.hpp"

namespace rsstilt {

// Walker alias table (Vose's construction): O(n) build, O(1) draws.
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> probabilities) {
    const std::size_t n = probabilities.size();
    if (n == 0) throw error(error_kind::invalid_weights, "empty probability vector");
    double total = 0.0;
    for (double p : probabilities) {
      if (!(p >= 0.0) || !std::isfinite(p)) throw error(error_kind::invalid_weights, "probabilities must be finite and >= 0");
      total += p;
    }
    if (!(total > 0.0)) throw error(error_kind::invalid_weights, "probabilities sum to zero");

    accept_.assign(n, 1.0);
    alias_.resize(n);
    std::vector<double> scaled(n);
    std::vector<std::uint32_t> small, large;
    for (std::size_t i = 0; i < n; ++i) {
      alias_[i] = static_cast<std::uint32_t>(i);
      scaled[i] = probabilities[i] * static_cast<double>(n) / total;
      (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
      const std::uint32_t s = small.back();
      small.pop_back();
      const std::uint32_t l = large.back();
      accept_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    // Leftovers are 1 up to rounding.
    for (std::uint32_t i : large) accept_[i] = 1.0;
    for (std::uint32_t i : small) accept_[i] = 1.0;
  }

  std::size_t size() const noexcept { return accept_.size(); }

  // One uniform in [0,1) picks both the column and the coin.
  template <class Engine>
  std::size_t operator()(Engine& g) const {
    const double x = g.uniform() * static_cast<double>(accept_.size());
    std::size_t column = static_cast<std::size_t>(x);
    if (column >= accept_.size()) column = accept_.size() - 1;
    const double coin = x - static_cast<double>(column);
    return coin < accept_[column] ? column : alias_[column];
  }

 private:
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace rsstilt
