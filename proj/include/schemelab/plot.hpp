#ifndef SCHEMELAB_PLOT_HPP
#define SCHEMELAB_PLOT_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace schemelab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains_strict(double t) const { return t > lo && t < hi; }
  double width() const { return hi - lo; }
};

struct Box {
  std::vector<Interval> dims;

  int dim() const { return static_cast<int>(dims.size()); }

  bool contains_strict(std::span<const double> p) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (size_t i = 0; i < dims.size(); ++i) {
      if (!dims[i].contains_strict(p[i])) return false;
    }
    return true;
  }
};

// Parametrized family: a map from an open box in R^d into some target
// (reals, coefficient vectors, sequences). Probes only query points
// strictly inside the domain box.
template <class Target>
struct Plot {
  Box domain;
  std::function<Target(const std::vector<double>&)> eval;

  Target operator()(const std::vector<double>& p) const {
    if (!domain.contains_strict(p)) throw std::domain_error("Plot: point outside domain box");
    return eval(p);
  }
};

using RealPlot = Plot<double>;

// 1-d convenience wrapper.
inline RealPlot interval_plot(double lo, double hi, std::function<double(double)> f) {
  RealPlot p;
  p.domain = Box{{Interval{lo, hi}}};
  p.eval = [f = std::move(f)](const std::vector<double>& q) { return f(q[0]); };
  return p;
}

}  // namespace schemelab

#endif
