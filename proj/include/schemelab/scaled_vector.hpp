#ifndef SCHEMELAB_SCALED_VECTOR_HPP
#define SCHEMELAB_SCALED_VECTOR_HPP

#include <vector>

namespace schemelab {

// Truncated element of a graded sequence space: K coefficients plus the
// Sobolev-like weight family w_i(k) = (1+k^2)^i used by graded_norm().
// Immutable after construction; all arithmetic returns new values and
// rejects non-finite entries.
class ScaledVector {
 public:
  explicit ScaledVector(std::vector<double> coeffs);

  static ScaledVector zero(int dim);
  static ScaledVector unit(int dim, int index);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  double operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  ScaledVector operator+(const ScaledVector& rhs) const;
  ScaledVector operator-(const ScaledVector& rhs) const;
  ScaledVector scaled(double a) const;

  bool operator==(const ScaledVector& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  std::vector<double> coeffs_;
};

ScaledVector operator*(double a, const ScaledVector& v);

// Weight for coefficient index k at norm level i: (1 + k^2)^i.
double graded_weight(int k, int level);

// ||v||_level = sqrt(sum_k (1+k^2)^level v_k^2). Level 0 is the Euclidean
// norm; the family is monotone in the level. Throws on negative level or
// non-finite accumulation (overflow).
double graded_norm(const ScaledVector& v, int level);

// A configured list of norm levels. norm() additionally checks that the
// requested level is one of the configured ones.
struct NormScale {
  std::vector<int> levels{0, 1, 2};

  bool has_level(int level) const;
  double norm(const ScaledVector& v, int level) const;
};

}  // namespace schemelab

#endif
