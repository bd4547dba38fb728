#include "schemelab/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemelab {

PathFunction PathFunction::zero(int segments, int dim) {
  if (segments < 1) throw std::invalid_argument("PathFunction: need at least one segment");
  PathFunction p;
  p.grid.resize(static_cast<size_t>(segments) + 1);
  for (int m = 0; m <= segments; ++m)
    p.grid[static_cast<size_t>(m)] = static_cast<double>(m) / static_cast<double>(segments);
  p.values.assign(static_cast<size_t>(segments) + 1, ScaledVector::zero(dim));
  return p;
}

namespace {

ScaledVector integrand(const FrobeniusProblem& problem, const ScaledVector& x,
                       const ScaledVector& y, const PathFunction& gamma, int m) {
  const double t = gamma.grid[static_cast<size_t>(m)];
  const ScaledVector dx = x - problem.x0;
  const ScaledVector xt = problem.x0 + t * dx;
  return problem.f(xt, y + gamma.at(m), dx);
}

}  // namespace

PathFunction picard_step(const FrobeniusProblem& problem, const ScaledVector& x,
                         const ScaledVector& y, const PathFunction& gamma) {
  const int segments = gamma.segments();
  if (graded_norm(gamma.values.front(), 0) != 0.0)
    throw std::invalid_argument("picard_step: input path must start at 0");
  const double dt = 1.0 / static_cast<double>(segments);

  std::vector<ScaledVector> g;
  g.reserve(static_cast<size_t>(segments) + 1);
  for (int m = 0; m <= segments; ++m) g.push_back(integrand(problem, x, y, gamma, m));

  PathFunction next;
  next.grid = gamma.grid;
  next.values.reserve(g.size());
  ScaledVector acc = ScaledVector::zero(g.front().dim());
  next.values.push_back(acc);
  for (int m = 0; m < segments; ++m) {
    acc = acc + (0.5 * dt) * (g[static_cast<size_t>(m)] + g[static_cast<size_t>(m) + 1]);
    next.values.push_back(acc);
  }
  return next;
}

bool path_in_domain(const FrobeniusProblem& problem, const ScaledVector& y,
                    const PathFunction& gamma) {
  for (const ScaledVector& v : gamma.values) {
    if (graded_norm(y + v - problem.y0, 0) >= problem.y_radius) return false;
  }
  return true;
}

double ode_residual(const FrobeniusProblem& problem, const ScaledVector& x, const ScaledVector& y,
                    const PathFunction& alpha) {
  const int segments = alpha.segments();
  if (segments < 2) return 0;
  const double dt = 1.0 / static_cast<double>(segments);
  double worst = 0;
  for (int m = 1; m < segments; ++m) {
    const ScaledVector grid_derivative =
        (1.0 / (2.0 * dt)) * (alpha.at(m + 1) - alpha.at(m - 1));
    const ScaledVector rhs = integrand(problem, x, y, alpha, m);
    worst = std::max(worst, graded_norm(grid_derivative - rhs, 0));
  }
  return worst;
}

FrobeniusSolution solve_frobenius(const FrobeniusProblem& problem, const ScaledVector& x,
                                  const ScaledVector& y, int grid_segments,
                                  const FrobeniusOptions& opts) {
  if (graded_norm(x - problem.x0, 0) >= problem.x_radius)
    throw std::domain_error("solve_frobenius: x outside the base ball");
  if (graded_norm(y - problem.y0, 0) >= problem.y_radius)
    throw std::domain_error("solve_frobenius: y outside the base ball");

  ConvergenceDetector detector(opts.tol, opts.window);
  PathFunction gamma = PathFunction::zero(grid_segments, problem.y0.dim());

  FrobeniusSolution sol(y, gamma);
  for (int k = 0; k < opts.max_iter; ++k) {
    PathFunction next = picard_step(problem, x, y, gamma);
    double sup = 0;
    for (size_t m = 0; m < next.values.size(); ++m)
      sup = std::max(sup, graded_norm(next.values[m] - gamma.values[m], 0));
    gamma = std::move(next);

    sol.sup_diffs.push_back(sup);
    sol.residual_trace.push_back(ode_residual(problem, x, y, gamma));
    if (!path_in_domain(problem, y, gamma)) {
      sol.in_domain = false;
      break;
    }
    if (detector.push(sup) != CauchyStatus::inconclusive) break;
  }

  sol.alpha = gamma;
  sol.j_value = y + gamma.values.back();
  sol.verdict = detector.verdict(0);
  sol.ode_residual = sol.residual_trace.empty() ? 0 : sol.residual_trace.back();
  return sol;
}

CompatibilityReport check_compatibility(
    const FrobeniusProblem& problem,
    const std::vector<std::pair<ScaledVector, ScaledVector>>& sample_points,
    const ScaledVector& a, const ScaledVector& b, double fd_step) {
  if (fd_step <= 0) throw std::invalid_argument("check_compatibility: bad step");

  // lhs(a,b) = D1 f(x,y)(a)(b) + D2 f(x,y)(f(x,y)(a))(b), both by central
  // differences.
  const auto lhs = [&](const ScaledVector& x, const ScaledVector& y, const ScaledVector& da,
                       const ScaledVector& db) {
    const ScaledVector d1 =
        (1.0 / (2.0 * fd_step)) * (problem.f(x + fd_step * da, y, db) - problem.f(x - fd_step * da, y, db));
    const ScaledVector w = problem.f(x, y, da);
    const ScaledVector d2 =
        (1.0 / (2.0 * fd_step)) * (problem.f(x, y + fd_step * w, db) - problem.f(x, y - fd_step * w, db));
    return d1 + d2;
  };

  CompatibilityReport report;
  for (const auto& [x, y] : sample_points) {
    const double defect = graded_norm(lhs(x, y, a, b) - lhs(x, y, b, a), 0);
    report.max_defect = std::max(report.max_defect, defect);
    ++report.samples;
  }
  return report;
}

}  // namespace schemelab
