#ifndef SCHEMELAB_FROBENIUS_HPP
#define SCHEMELAB_FROBENIUS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "schemelab/cauchy.hpp"
#include "schemelab/scaled_vector.hpp"

namespace schemelab {

// D1 J(x,y) = f(x, J(x,y)) with J(x0,.) = Id, solved through the
// path-space fixed point: gamma(t) = int_0^t f(x0 + s(x-x0), y + gamma(s))(x - x0) ds.
// f(x,y) is a linear map applied to a direction a.
struct FrobeniusProblem {
  std::function<ScaledVector(const ScaledVector& x, const ScaledVector& y, const ScaledVector& a)> f;
  ScaledVector x0;
  ScaledVector y0;
  double x_radius = 10.0;  // level-0 ball around x0
  double y_radius = 10.0;  // level-0 ball around y0
};

// Piecewise description of a path [0,1] -> F on a uniform grid with
// gamma(0) = 0 pinned.
struct PathFunction {
  std::vector<double> grid;          // M+1 equispaced times
  std::vector<ScaledVector> values;  // one per node

  static PathFunction zero(int segments, int dim);
  int segments() const { return static_cast<int>(grid.size()) - 1; }
  const ScaledVector& at(int m) const { return values[static_cast<size_t>(m)]; }
};

// One Picard sweep: composite-trapezoid prefix integration of the
// integrand along the straight segment from x0 to x. Pure; returns the
// new path with gamma(0) = 0 by construction.
PathFunction picard_step(const FrobeniusProblem& problem, const ScaledVector& x,
                         const ScaledVector& y, const PathFunction& gamma);

// Max over nodes of ||y + gamma(t) - y0||_0 < y_radius.
bool path_in_domain(const FrobeniusProblem& problem, const ScaledVector& y,
                    const PathFunction& gamma);

struct FrobeniusOptions {
  double tol = 1e-12;
  int max_iter = 80;
  int window = 4;
};

struct FrobeniusSolution {
  FrobeniusSolution(ScaledVector j, PathFunction a) : j_value(std::move(j)), alpha(std::move(a)) {}

  ScaledVector j_value;               // J = y + alpha(1)
  PathFunction alpha;
  CauchyVerdict verdict;
  std::vector<double> sup_diffs;      // sup-over-grid norm per Picard iteration
  std::vector<double> residual_trace; // ODE residual per Picard iteration
  double ode_residual = 0;            // final grid-derivative residual
  bool in_domain = true;

  bool accepted() const { return verdict.status == CauchyStatus::accepted && in_domain; }
};

// Picard iteration from gamma = 0 until the shared detector accepts on
// the sup-over-grid level-0 norm. The returned residual measures how well
// the grid derivative of y + alpha matches the prescribed right-hand side
// at interior nodes; it decays like M^-2 on smooth problems.
FrobeniusSolution solve_frobenius(const FrobeniusProblem& problem, const ScaledVector& x,
                                  const ScaledVector& y, int grid_segments,
                                  const FrobeniusOptions& opts = {});

double ode_residual(const FrobeniusProblem& problem, const ScaledVector& x, const ScaledVector& y,
                    const PathFunction& alpha);

struct CompatibilityReport {
  double max_defect = 0;
  int samples = 0;
};

// Finite-difference check of the symmetry hypothesis
//   D1 f(x,y)(a)(b) + D2 f(x,y)(f(x,y)(a))(b)  ==  same with a and b swapped.
CompatibilityReport check_compatibility(
    const FrobeniusProblem& problem,
    const std::vector<std::pair<ScaledVector, ScaledVector>>& sample_points,
    const ScaledVector& a, const ScaledVector& b, double fd_step = 1e-4);

}  // namespace schemelab

#endif
