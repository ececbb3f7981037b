#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsstilt {

enum class error_kind {
  invalid_design,
  invalid_sample,
  invalid_distribution,
  invalid_weights,
  target_out_of_range,
  degenerate_values,
  no_convergence,
  row_too_small,
  negative_sigma,
  dimension_mismatch,
  not_doubly_stochastic,
  population_too_small,
  weight_mismatch,
  non_positive_mean,
  zero_variance,
  unbalanced_design,
  parse_error,
};

// Stable names used in diagnostics and by the CLI.
constexpr std::string_view kind_name(error_kind k) noexcept {
  switch (k) {
    case error_kind::invalid_design: return "InvalidDesign";
    case error_kind::invalid_sample: return "InvalidSample";
    case error_kind::invalid_distribution: return "InvalidDistribution";
    case error_kind::invalid_weights: return "InvalidWeights";
    case error_kind::target_out_of_range: return "TargetOutOfRange";
    case error_kind::degenerate_values: return "DegenerateValues";
    case error_kind::no_convergence: return "NoConvergence";
    case error_kind::row_too_small: return "RowTooSmall";
    case error_kind::negative_sigma: return "NegativeSigma";
    case error_kind::dimension_mismatch: return "DimensionMismatch";
    case error_kind::not_doubly_stochastic: return "NotDoublyStochastic";
    case error_kind::population_too_small: return "PopulationTooSmall";
    case error_kind::weight_mismatch: return "WeightMismatch";
    case error_kind::non_positive_mean: return "NonPositiveMean";
    case error_kind::zero_variance: return "ZeroVariance";
    case error_kind::unbalanced_design: return "UnbalancedDesign";
    case error_kind::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace rsstilt
