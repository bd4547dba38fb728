#include "schemelab/scaled_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemelab {

namespace {

void require_finite(const std::vector<double>& coeffs) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("ScaledVector: non-finite coefficient");
  }
}

void require_same_dim(const ScaledVector& a, const ScaledVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ScaledVector: dimension mismatch");
}

}  // namespace

ScaledVector::ScaledVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ScaledVector: empty coefficient array");
  require_finite(coeffs_);
}

ScaledVector ScaledVector::zero(int dim) {
  if (dim < 1) throw std::invalid_argument("ScaledVector: dim must be >= 1");
  return ScaledVector(std::vector<double>(static_cast<size_t>(dim), 0.0));
}

ScaledVector ScaledVector::unit(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) throw std::invalid_argument("ScaledVector: bad unit index");
  std::vector<double> c(static_cast<size_t>(dim), 0.0);
  c[static_cast<size_t>(index)] = 1.0;
  return ScaledVector(std::move(c));
}

ScaledVector ScaledVector::operator+(const ScaledVector& rhs) const {
  require_same_dim(*this, rhs);
  std::vector<double> c(coeffs_);
  for (size_t k = 0; k < c.size(); ++k) c[k] += rhs.coeffs_[k];
  return ScaledVector(std::move(c));
}

ScaledVector ScaledVector::operator-(const ScaledVector& rhs) const {
  require_same_dim(*this, rhs);
  std::vector<double> c(coeffs_);
  for (size_t k = 0; k < c.size(); ++k) c[k] -= rhs.coeffs_[k];
  return ScaledVector(std::move(c));
}

ScaledVector ScaledVector::scaled(double a) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= a;
  return ScaledVector(std::move(c));
}

ScaledVector operator*(double a, const ScaledVector& v) { return v.scaled(a); }

double graded_weight(int k, int level) {
  if (level < 0) throw std::invalid_argument("graded_weight: negative level");
  const double base = 1.0 + static_cast<double>(k) * static_cast<double>(k);
  double w = 1.0;
  for (int i = 0; i < level; ++i) w *= base;
  return w;
}

double graded_norm(const ScaledVector& v, int level) {
  if (level < 0) throw std::invalid_argument("graded_norm: negative level");
  double sum = 0.0;
  for (int k = 0; k < v.dim(); ++k) {
    const double c = v[k];
    sum += graded_weight(k, level) * c * c;
  }
  const double n = std::sqrt(sum);
  if (!std::isfinite(n)) throw std::overflow_error("graded_norm: non-finite result");
  return n;
}

bool NormScale::has_level(int level) const {
  return std::find(levels.begin(), levels.end(), level) != levels.end();
}

double NormScale::norm(const ScaledVector& v, int level) const {
  if (!has_level(level)) throw std::out_of_range("NormScale: level not configured");
  return graded_norm(v, level);
}

}  // namespace schemelab
