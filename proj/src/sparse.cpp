#include "schemelab/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemelab {

CsrMatrix CsrMatrix::from_triplets(int n, std::vector<std::tuple<int, int, double>> triplets) {
  if (n < 0) throw std::invalid_argument("CsrMatrix: negative size");
  for (const auto& [i, j, v] : triplets) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("CsrMatrix: index out of range");
    (void)v;
  }
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });

  CsrMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < triplets.size();) {
    const int i = std::get<0>(triplets[k]);
    const int j = std::get<1>(triplets[k]);
    double sum = 0;
    while (k < triplets.size() && std::get<0>(triplets[k]) == i && std::get<1>(triplets[k]) == j) {
      sum += std::get<2>(triplets[k]);
      ++k;
    }
    m.cols_.push_back(j);
    m.vals_.push_back(sum);
    ++m.row_ptr_[static_cast<size_t>(i) + 1];
  }
  for (int i = 0; i < n; ++i) m.row_ptr_[static_cast<size_t>(i) + 1] += m.row_ptr_[static_cast<size_t>(i)];
  return m;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("CsrMatrix: size mismatch");
  for (int i = 0; i < n_; ++i) {
    double sum = 0;
    for (int k = row_ptr_[static_cast<size_t>(i)]; k < row_ptr_[static_cast<size_t>(i) + 1]; ++k)
      sum += vals_[static_cast<size_t>(k)] * x[static_cast<size_t>(cols_[static_cast<size_t>(k)])];
    y[static_cast<size_t>(i)] = sum;
  }
}

std::vector<double> CsrMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y(static_cast<size_t>(n_), 0.0);
  multiply(x, y);
  return y;
}

double CsrMatrix::coeff(int i, int j) const {
  for (int k = row_ptr_[static_cast<size_t>(i)]; k < row_ptr_[static_cast<size_t>(i) + 1]; ++k) {
    if (cols_[static_cast<size_t>(k)] == j) return vals_[static_cast<size_t>(k)];
  }
  return 0.0;
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(static_cast<size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) d[static_cast<size_t>(i)] = coeff(i, i);
  return d;
}

CsrMatrix CsrMatrix::scaled(double a) const {
  CsrMatrix m(*this);
  for (double& v : m.vals_) v *= a;
  return m;
}

CgResult conjugate_gradient(const CsrMatrix& a, std::span<const double> b, std::vector<double>& x,
                            const CgOptions& opts) {
  const int n = a.size();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("cg: rhs size mismatch");
  x.assign(static_cast<size_t>(n), 0.0);
  CgResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }

  std::vector<double> inv_diag;
  if (opts.jacobi) {
    inv_diag = a.diagonal();
    for (double& d : inv_diag) {
      if (d == 0) throw std::runtime_error("cg: zero diagonal with Jacobi preconditioner");
      d = 1.0 / d;
    }
  }
  const auto precondition = [&](const std::vector<double>& r, std::vector<double>& z) {
    if (opts.jacobi) {
      for (size_t i = 0; i < r.size(); ++i) z[i] = inv_diag[i] * r[i];
    } else {
      z = r;
    }
  };
  const auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };

  double b_norm = 0;
  for (double v : b) b_norm += v * v;
  b_norm = std::sqrt(b_norm);
  if (b_norm == 0) {
    result.converged = true;
    return result;
  }

  std::vector<double> r(b.begin(), b.end());
  std::vector<double> z(r.size());
  precondition(r, z);
  std::vector<double> p = z;
  std::vector<double> q(r.size());
  double rz = dot(r, z);

  const int max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * n;
  double res = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    a.multiply(p, q);
    const double alpha = rz / dot(p, q);
    for (size_t i = 0; i < p.size(); ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    result.iterations = it + 1;
    res = std::sqrt(dot(r, r)) / b_norm;
    if (res < opts.tol) {
      result.converged = true;
      break;
    }
    precondition(r, z);
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (size_t i = 0; i < p.size(); ++i) p[i] = z[i] + beta * p[i];
  }
  result.relative_residual = res;
  return result;
}

}  // namespace schemelab
