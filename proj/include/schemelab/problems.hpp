#ifndef SCHEMELAB_PROBLEMS_HPP
#define SCHEMELAB_PROBLEMS_HPP

#include "schemelab/fem.hpp"
#include "schemelab/frobenius.hpp"
#include "schemelab/ift.hpp"

namespace schemelab {

// Shared fixture problems used by the CLI experiments and the test
// suites.

// Manufactured Dirichlet problem: u*(x,y) = sin(pi x) sin(pi y) solves
// "Laplace u = f" with f = -2 pi^2 sin(pi x) sin(pi y).
LoadFunction sinsin_load();
std::function<double(double, double)> sinsin_exact();
std::function<Point2(double, double)> sinsin_exact_grad();

// f(x,y) = y + x*y - x (componentwise on dim coefficients); the implicit
// solution is u_k = x_k / (1 + x_k) and the iteration contracts with
// factor |x_k|.
ImplicitProblem affine_implicit_problem(int dim = 1, double x_radius = 2.0, double y_radius = 100.0);

// f(x,y) = y - A x with a fixed diagonal A; u(x) = A x exactly.
ImplicitProblem linear_implicit_problem(int dim, const std::vector<double>& diagonal);

// Frobenius right-hand side f(x,y)(a) = y * a (scalar state): the flow is
// J(x,y) = y * exp(x - x0).
FrobeniusProblem exponential_frobenius_problem();

// Constant right-hand side f(x,y)(a) = c * a: J(x,y) = y + c (x - x0).
FrobeniusProblem constant_frobenius_problem(double c);

// Two-dimensional x, scalar y: f(x,y)(a) = (a_1 + a_2) * y, satisfying the
// compatibility symmetry.
FrobeniusProblem planar_frobenius_problem();

}  // namespace schemelab

#endif
