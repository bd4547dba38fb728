#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "schemelab/ift.hpp"
#include "schemelab/problems.hpp"

using namespace schemelab;

namespace {

// Independent root oracle: bisection on y -> f(x, y) over a bracketing
// interval. Shares nothing with the fixed-point path.
double bisection_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
  double flo = g(lo);
  REQUIRE(flo * g(hi) < 0);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = g(mid);
    if (flo * fmid <= 0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("phi step is y - f(x,y)") {
  ImplicitProblem trivial;
  trivial.f = [](const ScaledVector&, const ScaledVector& y) { return y; };
  CHECK(phi_step(trivial, ScaledVector({0.3}), ScaledVector({2.0}))[0] == 0.0);

  const ImplicitProblem affine = affine_implicit_problem(1);
  CHECK(phi_step(affine, ScaledVector({0.5}), ScaledVector({0.0}))[0] ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi_step(affine, ScaledVector({0.5}), ScaledVector({0.5}))[0] ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("identity jacobian check accepts the affine family and rejects scaled ones") {
  CHECK_NOTHROW(check_identity_jacobian(affine_implicit_problem(4)));

  ImplicitProblem scaled = affine_implicit_problem(1);
  scaled.f = [](const ScaledVector&, const ScaledVector& y) { return y.scaled(2.0); };
  CHECK_THROWS_AS(check_identity_jacobian(scaled), std::runtime_error);
  CHECK_THROWS_AS(solve_implicit(scaled, ScaledVector({0.1})), std::runtime_error);
}

TEST_CASE("trivial problem solves in one step") {
  ImplicitProblem trivial;
  trivial.f = [](const ScaledVector&, const ScaledVector& y) { return y; };
  const ImplicitSolution sol = solve_implicit(trivial, ScaledVector({0.0}));
  CHECK(sol.accepted());
  CHECK(sol.u[0] == 0.0);
}

TEST_CASE("x = 0 solves to u = 0 immediately") {
  const ImplicitProblem problem = affine_implicit_problem(1);
  const ImplicitSolution sol = solve_implicit(problem, ScaledVector({0.0}));
  CHECK(sol.accepted());
  CHECK(sol.u[0] == 0.0);
  for (const auto& trace : sol.level_traces) {
    for (double d : trace) CHECK(d == 0.0);
  }
}

TEST_CASE("scalar affine solve agrees with closed form and bisection") {
  const ImplicitProblem problem = affine_implicit_problem(1);
  SolveOptions opts;
  for (double x : {-0.7, -0.25, 0.1, 0.5, 0.85}) {
    const ImplicitSolution sol = solve_implicit(problem, ScaledVector({x}), opts);
    REQUIRE(sol.accepted());
    const double closed = x / (1.0 + x);
    CHECK(std::abs(sol.u[0] - closed) <= 1e-10);

    const double oracle = bisection_root(
        [&, x](double y) { return problem.f(ScaledVector({x}), ScaledVector({y}))[0]; }, -20.0,
        20.0, 1e-13);
    CHECK(std::abs(sol.u[0] - oracle) <= 1e-10);

    // Fixed-point residual on accepted solves.
    CHECK(sol.residual_norms[0] <= 10.0 * opts.tol);
    // Measured contraction matches the analytic slope |x|; differences
    // near the tolerance floor carry ~1e-4 relative cancellation noise.
    CHECK(std::abs(sol.verdict.ratio_estimate - std::abs(x)) <= 1e-3);
  }
}

TEST_CASE("componentwise affine solve certifies every configured level") {
  const int dim = 8;
  const ImplicitProblem problem = affine_implicit_problem(dim);
  std::vector<double> xs(dim);
  for (int k = 0; k < dim; ++k) xs[static_cast<size_t>(k)] = 0.5 / (1.0 + k);
  const ImplicitSolution sol = solve_implicit(problem, ScaledVector(xs));
  REQUIRE(sol.in_domain);
  for (const auto& verdict : sol.level_verdicts) CHECK(verdict.status == CauchyStatus::accepted);
  for (int k = 0; k < dim; ++k) {
    const double closed = xs[static_cast<size_t>(k)] / (1.0 + xs[static_cast<size_t>(k)]);
    CHECK(std::abs(sol.u[k] - closed) <= 1e-10);
  }
  // Lower-level traces are pointwise dominated by higher-level ones.
  for (size_t n = 0; n < sol.level_traces[0].size(); ++n) {
    CHECK(sol.level_traces[0][n] <= sol.level_traces[1][n] * (1 + 1e-15));
    CHECK(sol.level_traces[1][n] <= sol.level_traces[2][n] * (1 + 1e-15));
  }
}

TEST_CASE("banach a-posteriori bound holds with the analytic ratio") {
  const ImplicitProblem problem = affine_implicit_problem(1);
  for (double x : {-0.8, -0.3, 0.2, 0.6, 0.9 * 0.99}) {
    const ImplicitSolution sol = solve_implicit(problem, ScaledVector({x}));
    REQUIRE(sol.accepted());
    const double q = std::abs(x);
    const double d0 = graded_norm(sol.iterates[1] - sol.iterates[0], 0);
    for (size_t n = 0; n < sol.iterates.size(); ++n) {
      const double gap = graded_norm(sol.u - sol.iterates[n], 0);
      CHECK(gap <= std::pow(q, static_cast<double>(n)) / (1.0 - q) * d0 + 1e-15);
    }
  }
}

TEST_CASE("solver rejects x outside the domain ball") {
  const ImplicitProblem problem = affine_implicit_problem(1, 0.5, 10.0);
  CHECK_THROWS_AS(solve_implicit(problem, ScaledVector({0.7})), std::domain_error);
}

TEST_CASE("domain exit is reported in the result, not thrown") {
  const ImplicitProblem problem = affine_implicit_problem(1, 2.0, 1.0);
  const ImplicitSolution sol = solve_implicit(problem, ScaledVector({1.5}));
  CHECK(!sol.in_domain);
  CHECK(!sol.accepted());
}

TEST_CASE("non-finite values from f throw") {
  ImplicitProblem problem = affine_implicit_problem(1);
  problem.f = [](const ScaledVector& x, const ScaledVector& y) {
    if (x[0] > 0.2 && y[0] > 0.1) return ScaledVector({std::nan("")});
    return y - x;
  };
  CHECK_NOTHROW(solve_implicit(problem, ScaledVector({0.1})));
  CHECK_THROWS(solve_implicit(problem, ScaledVector({0.5})));
}

TEST_CASE("domain probe accepts contractions and flags expansions") {
  const ImplicitProblem problem = affine_implicit_problem(1, 2.0, 1e6);
  const DomainProbeResult profile =
      domain_probe(problem, ScaledVector({1.0}), {0.1, 0.5, 0.9, 1.5});
  REQUIRE(profile.size() == 4);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(profile[i].status == CauchyStatus::accepted);
    CHECK(profile[i].in_domain);
    CHECK(std::abs(profile[i].ratio_estimate - profile[i].magnitude) <= 1e-3);
  }
  CHECK(profile[3].status == CauchyStatus::diverging);
  CHECK(profile[3].ratio_estimate >= 1.0);
  CHECK(profile[3].ratio_estimate == doctest::Approx(1.5).epsilon(1e-9));

  CHECK_THROWS_AS(domain_probe(problem, ScaledVector({1.0}), {0.5, 0.4}), std::invalid_argument);
}

TEST_CASE("x-independent problems accept everywhere with u = 0") {
  ImplicitProblem problem;
  problem.x_radius = 1e9;
  problem.f = [](const ScaledVector&, const ScaledVector& y) { return y; };
  const DomainProbeResult profile =
      domain_probe(problem, ScaledVector({1.0}), {1.0, 10.0, 1000.0});
  for (const auto& entry : profile) {
    CHECK(entry.status == CauchyStatus::accepted);
    CHECK(entry.u_norm == 0.0);
  }
}

TEST_CASE("solution plot probe recovers the derivative of x/(1+x)") {
  const ImplicitProblem problem = affine_implicit_problem(1);
  Plot<ScaledVector> x_plot;
  x_plot.domain = Box{{Interval{0.0, 0.9}}};
  x_plot.eval = [](const std::vector<double>& p) { return ScaledVector({p[0]}); };
  ProbeConfig probe;
  probe.h0 = 0.02;
  probe.halvings = 3;
  const SmoothnessReport report = solution_plot_probe(
      problem, x_plot, 0.5, [](const ScaledVector& u) { return u[0]; }, SolveOptions{}, probe);
  CHECK(report.verdict == ProbeVerdict::smooth_consistent);
  CHECK(std::abs(report.derivative_estimate - 4.0 / 9.0) <= 1e-3);
}

TEST_CASE("solution plot probe of a constant plot gives zero derivative") {
  const ImplicitProblem problem = affine_implicit_problem(1);
  Plot<ScaledVector> x_plot;
  x_plot.domain = Box{{Interval{-1.0, 1.0}}};
  x_plot.eval = [](const std::vector<double>&) { return ScaledVector({0.4}); };
  const SmoothnessReport report = solution_plot_probe(
      problem, x_plot, 0.0, [](const ScaledVector& u) { return u[0]; });
  CHECK(report.verdict == ProbeVerdict::smooth_consistent);
  CHECK(report.derivative_estimate == 0.0);
}

TEST_CASE("linear diagonal problem has exactly linear solutions") {
  const std::vector<double> diag = {2.0, -0.5, 3.0, 1.0};
  const ImplicitProblem problem = linear_implicit_problem(4, diag);
  Plot<ScaledVector> x_plot;
  x_plot.domain = Box{{Interval{-2.0, 2.0}}};
  x_plot.eval = [](const std::vector<double>& p) {
    return ScaledVector({p[0], 0.0, 0.0, 0.0});
  };
  // u(x) = A x, so the derivative along t -> t e_1 is A e_1 per coordinate.
  for (int coord = 0; coord < 4; ++coord) {
    const SmoothnessReport report = solution_plot_probe(
        problem, x_plot, 0.5, [coord](const ScaledVector& u) { return u[coord]; });
    const double expected = coord == 0 ? diag[0] : 0.0;
    CHECK(std::abs(report.derivative_estimate - expected) <= 1e-9);
  }
}

TEST_CASE("probe refuses plots that leave the convergence domain") {
  const ImplicitProblem problem = affine_implicit_problem(1, 3.0, 1e6);
  Plot<ScaledVector> x_plot;
  x_plot.domain = Box{{Interval{0.0, 2.5}}};
  x_plot.eval = [](const std::vector<double>& p) { return ScaledVector({p[0]}); };
  CHECK_THROWS_AS(solution_plot_probe(problem, x_plot, 1.5,
                                      [](const ScaledVector& u) { return u[0]; }),
                  std::domain_error);
}
