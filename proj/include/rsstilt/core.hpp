#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsstilt/error.hpp"

namespace rsstilt {

// Per-rank measurement counts (m_1, ..., m_k). Ranks are 0-based in the API.
class Design {
 public:
  explicit Design(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) {
      throw error(error_kind::invalid_design, "set size k must be at least 2");
    }
    for (std::size_t c : counts_) {
      if (c < 1) throw error(error_kind::invalid_design, "every rank needs at least one measurement");
    }
    n_ = std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
  }

  std::size_t k() const noexcept { return counts_.size(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t count(std::size_t rank) const { return counts_.at(rank); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  // q_{m_r} = m_r / n
  double share(std::size_t rank) const { return static_cast<double>(count(rank)) / static_cast<double>(n_); }

  bool balanced() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [&](std::size_t c) { return c == counts_.front(); });
  }

  std::size_t min_count() const noexcept { return *std::min_element(counts_.begin(), counts_.end()); }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::size_t n_ = 0;
};

// Named designs from the simulation study; D6 is the small balanced case.
inline Design named_design(int index) {
  switch (index) {
    case 1: return Design({5, 5, 5, 5, 5});
    case 2: return Design({8, 3, 3, 2, 4});
    case 3: return Design({3, 2, 5, 8, 3});
    case 4: return Design({3, 10, 3, 3, 3});
    case 5: return Design({4, 2, 3, 3, 8});
    case 6: return Design({2, 2, 2, 2, 2});
    default: throw error(error_kind::invalid_design, "named designs are D1..D6");
  }
}

// Ragged ranked-set sample: rows[r] holds the m_r measurements of rank r.
class UrssSample {
 public:
  UrssSample(Design design, std::vector<std::vector<double>> rows)
      : design_(std::move(design)), rows_(std::move(rows)) {
    if (rows_.size() != design_.k()) {
      throw error(error_kind::invalid_sample, "row count differs from design set size");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() != design_.count(r)) {
        throw error(error_kind::invalid_sample, "row " + std::to_string(r + 1) + " length differs from design");
      }
      for (double x : rows_[r]) {
        if (!std::isfinite(x)) throw error(error_kind::invalid_sample, "non-finite value");
      }
    }
  }

  // Design inferred from the row lengths.
  // (no std::move here: argument evaluation order is unspecified)
  explicit UrssSample(const std::vector<std::vector<double>>& rows) : UrssSample(design_of(rows), rows) {}

  const Design& design() const noexcept { return design_; }
  std::size_t k() const noexcept { return design_.k(); }
  std::size_t n() const noexcept { return design_.n(); }
  std::span<const double> row(std::size_t rank) const { return rows_.at(rank); }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

  double row_mean(std::size_t rank) const {
    auto x = row(rank);
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  }

  std::vector<double> row_means() const {
    std::vector<double> out(k());
    for (std::size_t r = 0; r < k(); ++r) out[r] = row_mean(r);
    return out;
  }

  // Unbiased row variance (divisor m_r - 1).
  double row_variance(std::size_t rank) const {
    auto x = row(rank);
    if (x.size() < 2) throw error(error_kind::row_too_small, "row " + std::to_string(rank + 1) + " has fewer than 2 values");
    const double mean = row_mean(rank);
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(x.size() - 1);
  }

  // Pooled mean of all n observations.
  double grand_mean() const {
    double s = 0.0;
    for (const auto& row : rows_) s = std::accumulate(row.begin(), row.end(), s);
    return s / static_cast<double>(n());
  }

  // Row-major flattening: all of rank 1, then rank 2, ...
  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(n());
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  double min_value() const {
    double m = rows_.front().front();
    for (const auto& row : rows_) m = std::min(m, *std::min_element(row.begin(), row.end()));
    return m;
  }

  double max_value() const {
    double m = rows_.front().front();
    for (const auto& row : rows_) m = std::max(m, *std::max_element(row.begin(), row.end()));
    return m;
  }

  friend bool operator==(const UrssSample&, const UrssSample&) = default;

 private:
  static Design design_of(const std::vector<std::vector<double>>& rows) {
    std::vector<std::size_t> counts;
    counts.reserve(rows.size());
    for (const auto& row : rows) counts.push_back(row.size());
    return Design(std::move(counts));
  }

  Design design_;
  std::vector<std::vector<double>> rows_;
};

struct Atom {
  double support;
  double probability;
};

// Right-continuous step function with one jump per distinct support point.
class WeightedDf {
 public:
  static constexpr double mass_tolerance = 1e-10;

  explicit WeightedDf(std::vector<Atom> atoms) {
    if (atoms.empty()) throw error(error_kind::invalid_weights, "distribution needs at least one atom");
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.support < b.support; });
    double total = 0.0;
    for (const Atom& a : atoms) {
      if (!std::isfinite(a.support) || !(a.probability >= 0.0)) {
        throw error(error_kind::invalid_weights, "atoms need finite support and nonnegative mass");
      }
      if (!atoms_.empty() && atoms_.back().support == a.support) {
        atoms_.back().probability += a.probability;
      } else {
        atoms_.push_back(a);
      }
      total += a.probability;
    }
    if (std::abs(total - 1.0) > mass_tolerance) {
      throw error(error_kind::invalid_weights, "atom masses sum to " + std::to_string(total));
    }
    cumulative_.reserve(atoms_.size());
    double c = 0.0;
    for (const Atom& a : atoms_) cumulative_.push_back(c += a.probability);
    cumulative_.back() = 1.0;
  }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  // Mass at or below t.
  double operator()(double t) const {
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), t,
                               [](double v, const Atom& a) { return v < a.support; });
    if (it == atoms_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
  }

  double mean() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.probability * a.support;
    return m;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
};

inline double eval_df(const WeightedDf& df, double t) { return df(t); }

// Empirical DF of the pooled sample: mass 1/n on each observation.
inline WeightedDf edf(const UrssSample& sample) {
  std::vector<Atom> atoms;
  atoms.reserve(sample.n());
  const double w = 1.0 / static_cast<double>(sample.n());
  for (const auto& row : sample.rows()) {
    for (double x : row) atoms.push_back({x, w});
  }
  return WeightedDf(std::move(atoms));
}

enum class Family { normal, exponential, logistic };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::normal: return "normal";
    case Family::exponential: return "exponential";
    case Family::logistic: return "logistic";
  }
  return "unknown";
}

inline Family parse_family(const std::string& name) {
  std::string t = name;
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "normal") return Family::normal;
  if (t == "exponential") return Family::exponential;
  if (t == "logistic") return Family::logistic;
  throw error(error_kind::invalid_distribution, "unknown family '" + name + "'");
}

// Normal(mean, sd), Exponential(mean) or Logistic(location, scale).
class DistributionSpec {
 public:
  static DistributionSpec normal(double mean, double sd) { return DistributionSpec(Family::normal, mean, sd); }
  static DistributionSpec exponential(double mean) { return DistributionSpec(Family::exponential, mean, 0.0); }
  static DistributionSpec logistic(double location, double scale) {
    return DistributionSpec(Family::logistic, location, scale);
  }

  Family family() const noexcept { return family_; }
  double first() const noexcept { return a_; }
  double second() const noexcept { return b_; }

  double mean() const noexcept { return a_; }

  double cdf(double x) const {
    switch (family_) {
      case Family::normal: return 0.5 * std::erfc(-(x - a_) / (b_ * std::numbers::sqrt2));
      case Family::exponential: return x <= 0.0 ? 0.0 : -std::expm1(-x / a_);
      case Family::logistic: return 1.0 / (1.0 + std::exp(-(x - a_) / b_));
    }
    return 0.0;
  }

  template <class Urbg>
  double sample(Urbg& g) const {
    switch (family_) {
      case Family::normal: return std::normal_distribution<double>(a_, b_)(g);
      case Family::exponential: return std::exponential_distribution<double>(1.0 / a_)(g);
      case Family::logistic: {
        double u = 0.0;
        do {
          u = std::generate_canonical<double, 53>(g);
        } while (u <= 0.0);
        return a_ + b_ * std::log(u / (1.0 - u));
      }
    }
    return 0.0;
  }

  std::string describe() const {
    switch (family_) {
      case Family::normal: return "normal(" + fmt(a_) + "," + fmt(b_) + ")";
      case Family::exponential: return "exponential(" + fmt(a_) + ")";
      case Family::logistic: return "logistic(" + fmt(a_) + "," + fmt(b_) + ")";
    }
    return "unknown";
  }

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

 private:
  DistributionSpec(Family f, double a, double b) : family_(f), a_(a), b_(b) {
    if (!std::isfinite(a_) || !std::isfinite(b_)) throw error(error_kind::invalid_distribution, "non-finite parameter");
    if (f == Family::exponential && !(a_ > 0.0)) {
      throw error(error_kind::invalid_distribution, "exponential mean must be positive");
    }
    if (f != Family::exponential && !(b_ > 0.0)) {
      throw error(error_kind::invalid_distribution, "scale must be positive");
    }
  }

  static std::string fmt(double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  Family family_;
  double a_;
  double b_;
};

// Stateful variate source; keeps the normal generator's cached second
// deviate, so one instance should be reused within a substream.
class VariateSampler {
 public:
  explicit VariateSampler(const DistributionSpec& spec)
      : spec_(spec), normal_(spec.first(), spec.family() == Family::normal ? spec.second() : 1.0) {}

  template <class Urbg>
  double operator()(Urbg& g) {
    if (spec_.family() == Family::normal) return normal_(g);
    return spec_.sample(g);
  }

 private:
  DistributionSpec spec_;
  std::normal_distribution<double> normal_;
};

}  // namespace rsstilt
