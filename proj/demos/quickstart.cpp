// Draw an unbalanced ranked set sample, tilt it to a null mean and run a
// few tests on it.

#include <cstdio>

#include "rsstilt/core.hpp"
#include "rsstilt/hypothesis.hpp"
#include "rsstilt/sampling.hpp"
#include "rsstilt/tilting.hpp"

int main() {
  using namespace rsstilt;

  const Design design = named_design(2);  // 8,3,3,2,4
  const UrssSample x = draw_urss(DistributionSpec::normal(0.3, 1.0), design, RngSeed{2024, 0});
  std::printf("n = %zu, k = %zu, mean = %.4f\n", x.n(), x.k(), x.grand_mean());

  // Per-rank weights that move the mean of the row means to zero.
  const TiltWeights w = ear_weights(x, 0.0);
  std::printf("lambda = %.6f\n", w.lambda);
  for (std::size_t r = 0; r < x.k(); ++r) {
    std::printf("  rank %zu: mean %.4f  weight %.4f\n", r + 1, x.row_mean(r), w.weights[r]);
  }
  const WeightedDf F = et_df_ear(x, w);
  std::printf("tilted F(0) = %.4f, mean = %.2e\n", F(0.0), F.mean());

  const TestOutcome pt = pt_test(x, 0.0);
  const TestOutcome wt = wt_test(x, 0.0);
  const TestOutcome ear = et_bootstrap_test(x, 0.0, ResampleMethod::ear, 999, RngSeed{7, 0});
  std::printf("PT  T = %.4f  p = %.4f\n", pt.statistic, pt.p_value);
  std::printf("WT  T = %.4f  df = %.2f  p = %.4f\n", wt.statistic, *wt.df, wt.p_value);
  std::printf("EAR T = %.4f  p = %.4f (B = 999)\n", ear.statistic, ear.p_value);
}
