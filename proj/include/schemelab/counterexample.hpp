#ifndef SCHEMELAB_COUNTEREXAMPLE_HPP
#define SCHEMELAB_COUNTEREXAMPLE_HPP

#include <utility>

#include "schemelab/cauchy.hpp"
#include "schemelab/plot.hpp"
#include "schemelab/scaled_vector.hpp"

namespace schemelab {

// Monotone C-infinity step [0,1] -> [0,1] with all derivatives vanishing
// at both ends, built from exp(-1/u) glue. Fixed closed form so tests are
// bit-reproducible.
double flat_step(double u);

// The path family Gamma(t)_n showing that term-wise smoothness does not
// make the limit map smooth: for each n the t-path is C-infinity, but the
// n-limit jumps from x (at t = 0) to y (for every t > 0).
//
//   Gamma(t)_n = x                                 for t <= 1/(n+2)
//                x + flat_step(tau) * (y - x)      for 1/(n+2) < t < 1/(n+1)
//                y                                 for t >= 1/(n+1)
//
// with tau the affine rescaling of [1/(n+2), 1/(n+1)] onto [0,1].
// Requires 0 <= t <= 1 and dim(x) == dim(y).
ScaledVector counterexample_path(const ScaledVector& x, const ScaledVector& y, double t, int n);

// Ramp interval (1/(k+2), 1/(k+1)) of the k-th term.
std::pair<double, double> path_seam(int k);

// The sequence n -> Gamma(t)_n for fixed t.
CauchySequence path_sequence(const ScaledVector& x, const ScaledVector& y, double t);

// t -> Gamma(t)_k[coeff] on (0, 1.5), extended by the constant y beyond
// t = 1 so the seam at 1/(k+1) can be probed two-sided for every k.
RealPlot path_term_plot(const ScaledVector& x, const ScaledVector& y, int k, int coeff = 0);

// t -> (lim_n Gamma(t)_n)[coeff], extended by the constant x to t < 0 so
// the jump at t = 0 can be probed two-sided. Each evaluation certifies the
// limit through limit_estimate; max_index must cover the stabilization
// index 1/t of the smallest probed t.
RealPlot path_limit_plot(const ScaledVector& x, const ScaledVector& y, int coeff = 0,
                         double tol = 1e-10, int window = 5, int max_index = 5000);

}  // namespace schemelab

#endif
