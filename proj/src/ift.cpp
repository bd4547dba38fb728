#include "schemelab/ift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemelab {

ScaledVector phi_step(const ImplicitProblem& problem, const ScaledVector& x,
                      const ScaledVector& y) {
  return y - problem.f(x, y);
}

void check_identity_jacobian(const ImplicitProblem& problem) {
  const ScaledVector x0 = ScaledVector::zero(problem.x_dim);
  const ScaledVector y0 = ScaledVector::zero(problem.y_dim);
  const double h = problem.jacobian_check_step;

  // Sample every coordinate up to 16, then a fixed stride beyond.
  std::vector<int> sample;
  const int stride = problem.y_dim <= 16 ? 1 : problem.y_dim / 16;
  for (int j = 0; j < problem.y_dim; j += stride) sample.push_back(j);

  for (int j : sample) {
    const ScaledVector ej = ScaledVector::unit(problem.y_dim, j);
    const ScaledVector col = (1.0 / (2.0 * h)) * (problem.f(x0, h * ej) - problem.f(x0, (-h) * ej));
    for (int i = 0; i < problem.y_dim; ++i) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(col[i] - expected) >= problem.jacobian_check_tol)
        throw std::runtime_error("ImplicitProblem: D2 f(0,0) is not the identity (coordinate " +
                                 std::to_string(j) + ")");
    }
  }
}

ImplicitSolution solve_implicit(const ImplicitProblem& problem, const ScaledVector& x,
                                const SolveOptions& opts) {
  if (x.dim() != problem.x_dim) throw std::invalid_argument("solve_implicit: x dimension mismatch");
  if (graded_norm(x, 0) >= problem.x_radius)
    throw std::domain_error("solve_implicit: x outside the domain ball");
  if (problem.levels.empty()) throw std::invalid_argument("solve_implicit: no norm levels");
  check_identity_jacobian(problem);

  std::vector<ConvergenceDetector> detectors;
  detectors.reserve(problem.levels.size());
  for (size_t i = 0; i < problem.levels.size(); ++i)
    detectors.emplace_back(opts.tol, opts.window);

  ImplicitSolution sol(ScaledVector::zero(problem.y_dim));
  sol.level_traces.resize(problem.levels.size());
  sol.iterates.push_back(sol.u);

  ScaledVector y = sol.u;
  for (int n = 0; n < opts.max_iter; ++n) {
    const ScaledVector next = phi_step(problem, x, y);
    const ScaledVector step = next - y;

    bool all_accepted = true;
    bool any_diverging = false;
    for (size_t i = 0; i < detectors.size(); ++i) {
      const double d = graded_norm(step, problem.levels[i]);
      const CauchyStatus s = detectors[i].push(d);
      sol.level_traces[i].push_back(d);
      all_accepted = all_accepted && s == CauchyStatus::accepted;
      any_diverging = any_diverging || s == CauchyStatus::diverging;
    }

    y = next;
    sol.iterates.push_back(y);
    if (graded_norm(y, 0) >= problem.y_radius) {
      sol.in_domain = false;
      break;
    }
    if (all_accepted || any_diverging) break;
  }

  sol.u = y;
  for (size_t i = 0; i < detectors.size(); ++i)
    sol.level_verdicts.push_back(detectors[i].verdict(problem.levels[i]));
  sol.verdict = sol.level_verdicts.back();

  const ScaledVector residual = problem.f(x, sol.u);
  for (int level : problem.levels) sol.residual_norms.push_back(graded_norm(residual, level));
  return sol;
}

DomainProbeResult domain_probe(const ImplicitProblem& problem, const ScaledVector& ray,
                               const std::vector<double>& magnitudes, const SolveOptions& opts) {
  for (size_t i = 0; i + 1 < magnitudes.size(); ++i) {
    if (magnitudes[i + 1] <= magnitudes[i])
      throw std::invalid_argument("domain_probe: magnitudes must be positive increasing");
  }
  if (!magnitudes.empty() && magnitudes.front() <= 0)
    throw std::invalid_argument("domain_probe: magnitudes must be positive");
  const double ray_norm = graded_norm(ray, 0);
  if (ray_norm == 0) throw std::invalid_argument("domain_probe: zero ray");
  const ScaledVector direction = (1.0 / ray_norm) * ray;

  DomainProbeResult result;
  for (double m : magnitudes) {
    const ImplicitSolution sol = solve_implicit(problem, m * direction, opts);
    DomainProbeEntry entry;
    entry.magnitude = m;
    entry.status = sol.verdict.status;
    entry.in_domain = sol.in_domain;
    entry.ratio_estimate = sol.verdict.ratio_estimate;
    entry.u_norm = graded_norm(sol.u, 0);
    result.push_back(entry);
  }
  return result;
}

SmoothnessReport solution_plot_probe(const ImplicitProblem& problem,
                                     const Plot<ScaledVector>& x_plot, double point,
                                     const std::function<double(const ScaledVector&)>& observable,
                                     const SolveOptions& opts, const ProbeConfig& probe) {
  BoxFunction f = [&](const std::vector<double>& p) {
    const ScaledVector x = x_plot.eval(p);
    const ImplicitSolution sol = solve_implicit(problem, x, opts);
    if (!sol.accepted())
      throw std::domain_error("solution_plot_probe: probe point failed to converge (" +
                              sol.verdict.one_line() + ")");
    return observable(sol.u);
  };
  return probe_smoothness(x_plot.domain, f, {point}, {1.0}, probe);
}

}  // namespace schemelab
