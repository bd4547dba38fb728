#include "schemelab/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schemelab {

namespace {
constexpr double kPi = std::numbers::pi;
}

LoadFunction sinsin_load() {
  return [](double x, double y) {
    return -2.0 * kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y);
  };
}

std::function<double(double, double)> sinsin_exact() {
  return [](double x, double y) { return std::sin(kPi * x) * std::sin(kPi * y); };
}

std::function<Point2(double, double)> sinsin_exact_grad() {
  return [](double x, double y) {
    return Point2{kPi * std::cos(kPi * x) * std::sin(kPi * y),
                  kPi * std::sin(kPi * x) * std::cos(kPi * y)};
  };
}

ImplicitProblem affine_implicit_problem(int dim, double x_radius, double y_radius) {
  ImplicitProblem problem;
  problem.x_dim = dim;
  problem.y_dim = dim;
  problem.x_radius = x_radius;
  problem.y_radius = y_radius;
  problem.f = [](const ScaledVector& x, const ScaledVector& y) {
    std::vector<double> out(static_cast<size_t>(y.dim()));
    for (int k = 0; k < y.dim(); ++k) out[static_cast<size_t>(k)] = y[k] + x[k] * y[k] - x[k];
    return ScaledVector(std::move(out));
  };
  return problem;
}

ImplicitProblem linear_implicit_problem(int dim, const std::vector<double>& diagonal) {
  if (static_cast<int>(diagonal.size()) != dim)
    throw std::invalid_argument("linear_implicit_problem: diagonal size mismatch");
  ImplicitProblem problem;
  problem.x_dim = dim;
  problem.y_dim = dim;
  problem.x_radius = 100.0;
  problem.y_radius = 1e6;
  problem.f = [diagonal](const ScaledVector& x, const ScaledVector& y) {
    std::vector<double> out(static_cast<size_t>(y.dim()));
    for (int k = 0; k < y.dim(); ++k)
      out[static_cast<size_t>(k)] = y[k] - diagonal[static_cast<size_t>(k)] * x[k];
    return ScaledVector(std::move(out));
  };
  return problem;
}

FrobeniusProblem exponential_frobenius_problem() {
  FrobeniusProblem problem{
      [](const ScaledVector&, const ScaledVector& y, const ScaledVector& a) {
        return ScaledVector({y[0] * a[0]});
      },
      ScaledVector::zero(1), ScaledVector({1.0}), 10.0, 10.0};
  return problem;
}

FrobeniusProblem constant_frobenius_problem(double c) {
  FrobeniusProblem problem{
      [c](const ScaledVector&, const ScaledVector&, const ScaledVector& a) {
        return ScaledVector({c * a[0]});
      },
      ScaledVector::zero(1), ScaledVector::zero(1), 10.0, 10.0};
  return problem;
}

FrobeniusProblem planar_frobenius_problem() {
  FrobeniusProblem problem{
      [](const ScaledVector&, const ScaledVector& y, const ScaledVector& a) {
        return ScaledVector({(a[0] + a[1]) * y[0]});
      },
      ScaledVector::zero(2), ScaledVector({1.0}), 10.0, 10.0};
  return problem;
}

}  // namespace schemelab
