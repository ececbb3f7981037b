#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "rsstilt/error.hpp"

// Passes when f throws rsstilt::error of the given kind.
inline ::testing::AssertionResult throws_kind(const std::function<void()>& f, rsstilt::error_kind kind) {
  try {
    f();
  } catch (const rsstilt::error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << rsstilt::kind_name(e.kind()) << " (" << e.what() << ")";
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "threw foreign exception: " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw";
}

#define EXPECT_KIND(stmt, kind) EXPECT_TRUE(throws_kind([&] { (void)(stmt); }, rsstilt::error_kind::kind))

inline double relative_error(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

// Pearson correlation, for calibration checks.
inline double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}
