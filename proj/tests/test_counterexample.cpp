#include <doctest.h>

#include <cmath>

#include "schemelab/counterexample.hpp"
#include "schemelab/smoothness.hpp"

using namespace schemelab;

namespace {
const ScaledVector kX({0.0});
const ScaledVector kY({1.0});
}  // namespace

TEST_CASE("flat step is a monotone bridge with flat ends") {
  CHECK(flat_step(0.0) == 0.0);
  CHECK(flat_step(1.0) == 1.0);
  CHECK(flat_step(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  double prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double cur = flat_step(i / 100.0);
    CHECK(cur >= prev);
    prev = cur;
  }
  // Superexponentially flat near the ends.
  CHECK(flat_step(0.01) < 1e-40);
  CHECK(1.0 - flat_step(0.99) < 1e-40);
}

TEST_CASE("path branch membership") {
  // t = 0 gives x for every n, so lim_n Gamma(0) = x.
  for (int n : {0, 1, 5, 40}) CHECK(counterexample_path(kX, kY, 0.0, n)[0] == 0.0);

  // Fixed t = 0.5: the ramp of term 0 starts at 1/2, so term 0 is still x;
  // every later term has 1/(n+1) <= 1/2 and equals y. The limit is y for
  // every positive t.
  CHECK(counterexample_path(kX, kY, 0.5, 0)[0] == 0.0);
  for (int n : {1, 2, 10, 50}) CHECK(counterexample_path(kX, kY, 0.5, n)[0] == 1.0);

  // t = 1 sits at or beyond every ramp.
  for (int n : {0, 3, 12}) CHECK(counterexample_path(kX, kY, 1.0, n)[0] == 1.0);

  CHECK_THROWS_AS(counterexample_path(kX, kY, -0.1, 1), std::domain_error);
  CHECK_THROWS_AS(counterexample_path(kX, kY, 1.1, 1), std::domain_error);
}

TEST_CASE("each term map is continuous across its ramp") {
  const int n = 4;
  const auto [lo, hi] = path_seam(n);
  const double eps = 1e-9;
  CHECK(counterexample_path(kX, kY, lo + eps, n)[0] ==
        doctest::Approx(counterexample_path(kX, kY, lo, n)[0]).epsilon(1e-12));
  CHECK(counterexample_path(kX, kY, hi - eps, n)[0] ==
        doctest::Approx(counterexample_path(kX, kY, hi, n)[0]).epsilon(1e-12));
}

TEST_CASE("one-sided derivatives of orders 1 and 2 agree at the seams") {
  // Direct one-sided finite differences on each side of both seams; the
  // flat-step glue makes them all vanish.
  for (int k : {0, 2, 7}) {
    const auto [lo, hi] = path_seam(k);
    const double h = (hi - lo) / 64.0;
    // Constant extension past t = 1 so the k = 0 upper seam has a right side.
    const auto value = [&](double t) { return counterexample_path(kX, kY, std::min(t, 1.0), k)[0]; };
    for (double seam : {lo, hi}) {
      const double right1 = (value(seam + h) - value(seam)) / h;
      const double left1 = (value(seam) - value(seam - h)) / h;
      CHECK(std::abs(right1 - left1) <= 1e-6);
      const double right2 = (value(seam + 2 * h) - 2 * value(seam + h) + value(seam)) / (h * h);
      const double left2 = (value(seam) - 2 * value(seam - h) + value(seam - 2 * h)) / (h * h);
      CHECK(std::abs(right2 - left2) <= 1e-4);
    }
  }
}

TEST_CASE("term plots probe smooth at every seam up to k = 10") {
  for (int k = 0; k <= 10; ++k) {
    const auto [lo, hi] = path_seam(k);
    for (double seam : {lo, hi}) {
      ProbeConfig config;
      config.h0 = 0.5 * (hi - lo);
      config.halvings = 6;
      const SmoothnessReport report = probe_smoothness(path_term_plot(kX, kY, k), seam, config);
      CHECK(report.verdict == ProbeVerdict::smooth_consistent);
    }
  }
}

TEST_CASE("the limit map jumps at t = 0 with magnitude |y - x|") {
  const ScaledVector x({0.25});
  const ScaledVector y({2.0});
  ProbeConfig config;
  config.h0 = 0.05;
  config.halvings = 5;
  const SmoothnessReport report = probe_smoothness(path_limit_plot(x, y), 0.0, config);
  CHECK(report.verdict == ProbeVerdict::jump_detected);
  CHECK(report.jump_magnitude == doctest::Approx(1.75).epsilon(1e-9));
}

TEST_CASE("path sequences certify their limits") {
  // Positive t: eventually constant y.
  CauchySequence at_half = path_sequence(kX, kY, 0.5);
  const LimitEstimate lim = limit_estimate(at_half, 0, 1e-10, 5, 100);
  CHECK(lim.value[0] == 1.0);

  // t = 0: constant x.
  CauchySequence at_zero = path_sequence(kX, kY, 0.0);
  CHECK(limit_estimate(at_zero, 0, 1e-10, 5, 100).value[0] == 0.0);
}
