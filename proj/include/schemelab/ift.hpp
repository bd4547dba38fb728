#ifndef SCHEMELAB_IFT_HPP
#define SCHEMELAB_IFT_HPP

#include <functional>
#include <vector>

#include "schemelab/cauchy.hpp"
#include "schemelab/plot.hpp"
#include "schemelab/scaled_vector.hpp"
#include "schemelab/smoothness.hpp"

namespace schemelab {

// A functional equation f(x, y) = 0 on a truncated scale, normalized so
// that the y-derivative at the origin is the identity. The domain is the
// product of level-0 open balls ||x||_0 < x_radius, ||y||_0 < y_radius;
// Cauchy certification runs on the configured norm levels.
struct ImplicitProblem {
  std::function<ScaledVector(const ScaledVector&, const ScaledVector&)> f;
  int x_dim = 1;
  int y_dim = 1;
  double x_radius = 1.0;
  double y_radius = 1.0;
  std::vector<int> levels{0, 1, 2};
  double jacobian_check_step = 1e-5;
  double jacobian_check_tol = 1e-4;
};

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 1000;
  int window = 5;
};

struct ImplicitSolution {
  explicit ImplicitSolution(ScaledVector u0) : u(std::move(u0)) {}

  ScaledVector u;                                // last iterate; the limit stand-in
  std::vector<std::vector<double>> level_traces; // per level: ||y_{n+1} - y_n||
  std::vector<CauchyVerdict> level_verdicts;     // per configured level
  CauchyVerdict verdict;                         // highest configured level
  std::vector<double> residual_norms;            // ||f(x,u)|| per configured level
  bool in_domain = true;                         // all iterates stayed in the y-ball
  std::vector<ScaledVector> iterates;            // y_0 .. y_N

  bool accepted() const { return verdict.status == CauchyStatus::accepted && in_domain; }
};

// One fixed-point step y - f(x, y).
ScaledVector phi_step(const ImplicitProblem& problem, const ScaledVector& x,
                      const ScaledVector& y);

// Finite-difference check that D2 f(0,0) = Id; throws std::runtime_error
// when the defect on any sampled coordinate exceeds jacobian_check_tol.
// Run by solve_implicit before iterating: without this normalization the
// fixed-point map has no contraction near the origin and the iteration
// silently produces garbage.
void check_identity_jacobian(const ImplicitProblem& problem);

// Iterates phi from y = 0 until the shared detector accepts on every
// configured level, diverges, leaves the domain ball, or hits max_iter.
// Domain exit and non-convergence are reported in the result, not thrown.
ImplicitSolution solve_implicit(const ImplicitProblem& problem, const ScaledVector& x,
                                const SolveOptions& opts = {});

struct DomainProbeEntry {
  double magnitude = 0;
  CauchyStatus status = CauchyStatus::inconclusive;
  bool in_domain = true;
  double ratio_estimate = 0;
  double u_norm = 0;  // ||u||_0 of the last iterate
};

using DomainProbeResult = std::vector<DomainProbeEntry>;

// Empirical convergence profile along x = magnitude * ray / ||ray||_0; the
// largest accepted magnitude is a lower bound on the domain extent. No
// a-priori estimates are assumed.
DomainProbeResult domain_probe(const ImplicitProblem& problem, const ScaledVector& ray,
                               const std::vector<double>& magnitudes,
                               const SolveOptions& opts = {});

// Probes t -> observable(u(x_plot(t))). Every probe point must converge;
// a failed solve is a domain violation and throws.
SmoothnessReport solution_plot_probe(const ImplicitProblem& problem,
                                     const Plot<ScaledVector>& x_plot, double point,
                                     const std::function<double(const ScaledVector&)>& observable,
                                     const SolveOptions& opts = {}, const ProbeConfig& probe = {});

}  // namespace schemelab

#endif
