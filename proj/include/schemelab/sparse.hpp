#ifndef SCHEMELAB_SPARSE_HPP
#define SCHEMELAB_SPARSE_HPP

#include <span>
#include <tuple>
#include <vector>

namespace schemelab {

// Compressed-sparse-row square matrix; duplicate triplets are summed.
class CsrMatrix {
 public:
  static CsrMatrix from_triplets(int n, std::vector<std::tuple<int, int, double>> triplets);

  int size() const { return n_; }
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(const std::vector<double>& x) const;
  double coeff(int i, int j) const;  // 0 when the entry is not stored
  std::vector<double> diagonal() const;
  CsrMatrix scaled(double a) const;

 private:
  int n_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> cols_;
  std::vector<double> vals_;
};

struct CgOptions {
  double tol = 1e-10;  // relative residual ||b - Ax|| / ||b||
  int max_iter = 0;    // 0 selects 10n
  bool jacobi = false;
};

struct CgResult {
  int iterations = 0;
  double relative_residual = 0;
  bool converged = false;
};

// Plain (optionally Jacobi-preconditioned) conjugate gradient from x = 0.
CgResult conjugate_gradient(const CsrMatrix& a, std::span<const double> b, std::vector<double>& x,
                            const CgOptions& opts = {});

}  // namespace schemelab

#endif
