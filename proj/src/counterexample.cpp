#include "schemelab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schemelab {

double flat_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

ScaledVector counterexample_path(const ScaledVector& x, const ScaledVector& y, double t, int n) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("counterexample_path: t outside [0,1]");
  if (n < 0) throw std::invalid_argument("counterexample_path: negative index");
  if (x.dim() != y.dim()) throw std::invalid_argument("counterexample_path: dimension mismatch");
  const auto [lo, hi] = path_seam(n);
  if (t <= lo) return x;
  if (t >= hi) return y;
  const double tau = (t - lo) / (hi - lo);
  return x + flat_step(tau) * (y - x);
}

std::pair<double, double> path_seam(int k) {
  return {1.0 / static_cast<double>(k + 2), 1.0 / static_cast<double>(k + 1)};
}

CauchySequence path_sequence(const ScaledVector& x, const ScaledVector& y, double t) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("path_sequence: t outside [0,1]");
  return CauchySequence([x, y, t](int n) { return counterexample_path(x, y, t, n); });
}

RealPlot path_term_plot(const ScaledVector& x, const ScaledVector& y, int k, int coeff) {
  if (coeff < 0 || coeff >= x.dim()) throw std::invalid_argument("path_term_plot: bad coefficient");
  RealPlot plot;
  plot.domain = Box{{Interval{0.0, 1.5}}};
  plot.eval = [x, y, k, coeff](const std::vector<double>& p) {
    return counterexample_path(x, y, std::min(p[0], 1.0), k)[coeff];
  };
  return plot;
}

RealPlot path_limit_plot(const ScaledVector& x, const ScaledVector& y, int coeff, double tol,
                         int window, int max_index) {
  if (coeff < 0 || coeff >= x.dim()) throw std::invalid_argument("path_limit_plot: bad coefficient");
  RealPlot plot;
  plot.domain = Box{{Interval{-0.5, 1.0}}};
  plot.eval = [x, y, coeff, tol, window, max_index](const std::vector<double>& p) {
    const double t = std::clamp(p[0], 0.0, 1.0);
    // Term n has stabilized at y once t >= 1/(n+1), so certification must
    // not start before the ramp has passed; a stalled prefix would
    // otherwise certify the wrong limit.
    int min_index = 0;
    if (t > 0.0) {
      const double horizon = std::ceil(1.0 / t) + 1.0;
      if (horizon + window + 2 > static_cast<double>(max_index))
        throw std::domain_error("path_limit_plot: max_index too small for t this close to 0");
      min_index = static_cast<int>(horizon);
    }
    CauchySequence seq = path_sequence(x, y, t);
    return limit_estimate(seq, 0, tol, window, max_index, min_index).value[coeff];
  };
  return plot;
}

}  // namespace schemelab
