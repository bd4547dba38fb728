#include <doctest.h>

#include <cmath>
#include <thread>

#include "schemelab/cauchy.hpp"

using namespace schemelab;

namespace {

CauchySequence geometric_scalar() {
  // x_n = 1 - 2^{-n}; differences 2^{-(n+1)}, ratio exactly 1/2.
  return CauchySequence([](int n) { return ScaledVector({1.0 - std::pow(2.0, -n)}); });
}

}  // namespace

TEST_CASE("ev returns memoized deterministic terms") {
  CauchySequence seq = geometric_scalar();
  CHECK(seq.ev(3)[0] == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(seq.ev(3)[0] == seq.ev(3)[0]);
  CHECK(seq.ev(0)[0] == 0.0);
  CHECK(seq.max_index_computed() == 3);

  CauchySequence linear([](int n) { return ScaledVector({static_cast<double>(n)}); });
  CHECK(linear.ev(4)[0] == 4.0);

  const ScaledVector c({2.5, -1.0});
  CauchySequence constant([c](int) { return c; });
  CHECK(constant.ev(0) == c);
  CHECK(constant.ev(17) == c);
}

TEST_CASE("ev surfaces generator failures as poisoned terms") {
  CauchySequence bad([](int n) {
    if (n >= 5) return ScaledVector({1.0 / 0.0});  // inf: rejected by the ctor
    return ScaledVector({static_cast<double>(n)});
  });
  CHECK(bad.ev(4)[0] == 4.0);
  CHECK_THROWS_AS(bad.ev(5), PoisonedTermError);
  try {
    bad.ev(7);
  } catch (const PoisonedTermError& e) {
    CHECK(e.index == 7);
  }
}

TEST_CASE("concurrent ev calls agree") {
  CauchySequence seq = geometric_scalar();
  std::vector<std::thread> threads;
  std::vector<double> results(8, 0.0);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&seq, &results, i]() { results[static_cast<size_t>(i)] = seq.ev(20)[0]; });
  }
  for (auto& t : threads) t.join();
  for (double r : results) CHECK(r == results[0]);
}

TEST_CASE("geometric sequences are accepted with the exact ratio") {
  CauchySequence seq = geometric_scalar();
  const CauchyVerdict v = is_cauchy(seq, 0, 1e-8, 5, 200);
  CHECK(v.status == CauchyStatus::accepted);
  CHECK(v.ratio_estimate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v.tail_bound > 0.0);
  CHECK(v.tail_bound <= 1e-8);  // q/(1-q) = 1 at q = 1/2, window diffs <= tol
}

TEST_CASE("arithmetic growth is diverging") {
  CauchySequence seq([](int n) { return ScaledVector({static_cast<double>(n)}); });
  const CauchyVerdict v = is_cauchy(seq, 0, 1e-8, 5, 100);
  CHECK(v.status == CauchyStatus::diverging);
  CHECK(v.ratio_estimate >= 1.0);
}

TEST_CASE("harmonic partial sums stay inconclusive") {
  // d_n = 1/(n+2) shrinks but never certifies: the ratio estimate tends
  // to 1 and the differences stay far above tolerance up to 10^4 terms.
  CauchySequence seq([](int n) {
    double s = 0;
    for (int m = 1; m <= n; ++m) s += 1.0 / m;
    return ScaledVector({s});
  });
  const CauchyVerdict v = is_cauchy(seq, 0, 1e-8, 5, 10000);
  CHECK(v.status == CauchyStatus::inconclusive);
  CHECK(v.ratio_estimate > 0.99);
  CHECK(v.ratio_estimate < 1.0);
}

TEST_CASE("is_cauchy validates preconditions") {
  CauchySequence seq = geometric_scalar();
  CHECK_THROWS_AS(is_cauchy(seq, 0, -1.0, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(is_cauchy(seq, 0, 1e-8, 2, 100), std::invalid_argument);
  CHECK_THROWS_AS(is_cauchy(seq, 0, 1e-8, 5, 6), std::invalid_argument);
}

TEST_CASE("limit estimate certifies geometric limits") {
  CauchySequence seq = geometric_scalar();
  const LimitEstimate lim = limit_estimate(seq, 0, 1e-8);
  CHECK(std::abs(lim.value[0] - 1.0) <= 1e-8);
  CHECK(std::abs(lim.value[0] - 1.0) <= lim.tail_bound);

  const ScaledVector c({4.0});
  CauchySequence constant([c](int) { return c; });
  const LimitEstimate lc = limit_estimate(constant, 0, 1e-12);
  CHECK(lc.value[0] == 4.0);
  CHECK(lc.tail_bound == 0.0);
}

TEST_CASE("limit estimate works componentwise on K=2 tails") {
  CauchySequence seq([](int n) {
    return ScaledVector({1.0 - std::pow(3.0, -n), 2.0 - std::pow(2.0, -n)});
  });
  const LimitEstimate lim = limit_estimate(seq, 0, 1e-9);
  CHECK(std::abs(lim.value[0] - 1.0) <= 1e-9);
  CHECK(std::abs(lim.value[1] - 2.0) <= 1e-9);
}

TEST_CASE("limit estimate refuses non-Cauchy data") {
  CauchySequence diverging([](int n) { return ScaledVector({static_cast<double>(n)}); });
  CHECK_THROWS_AS(limit_estimate(diverging, 0, 1e-8), NotCauchyError);
  CauchySequence harmonic([](int n) {
    double s = 0;
    for (int m = 1; m <= n; ++m) s += 1.0 / m;
    return ScaledVector({s});
  });
  CHECK_THROWS_AS(limit_estimate(harmonic, 0, 1e-8, 5, 2000), NotCauchyError);
}

TEST_CASE("tail bound dominates the true tail on synthetic geometric sequences") {
  for (double q : {0.2, 0.5, 0.8}) {
    const double limit = 3.0;
    CauchySequence seq([q, limit](int n) { return ScaledVector({limit - std::pow(q, n)}); });
    const LimitEstimate lim = limit_estimate(seq, 0, 1e-10, 5, 1000);
    // The geometric tail meets the bound with equality in exact
    // arithmetic; allow rounding headroom at the 1e-14 scale.
    CHECK(std::abs(lim.value[0] - limit) <= lim.tail_bound + 1e-14);
    // The certified bound also dominates later terms' gaps to the limit.
    for (int extra = 0; extra < 5; ++extra) {
      const int n = lim.verdict.terms_used + extra;
      CHECK(std::abs(seq.ev(n)[0] - limit) <= lim.tail_bound + 1e-14);
    }
  }
}

TEST_CASE("acceptance is monotone down the norm scale") {
  // Componentwise geometric tails; if level j certifies, every i <= j
  // certifies with the same tolerance since ||.||_i <= ||.||_j.
  CauchySequence seq([](int n) {
    return ScaledVector({std::pow(0.5, n), std::pow(0.5, n), std::pow(0.5, n), std::pow(0.5, n)});
  });
  const CauchyVerdict at2 = is_cauchy(seq, 2, 1e-8, 5, 300);
  REQUIRE(at2.status == CauchyStatus::accepted);
  for (int level : {0, 1}) {
    const CauchyVerdict v = is_cauchy(seq, level, 1e-8, 5, 300);
    CHECK(v.status == CauchyStatus::accepted);
    CHECK(v.terms_used <= at2.terms_used);
  }
}

TEST_CASE("trace rows carry differences and ratios") {
  CauchySequence seq = geometric_scalar();
  const auto rows = cauchy_trace(seq, 0, 10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].d_n == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rows[3].ratio == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[0].level == 0);
}
