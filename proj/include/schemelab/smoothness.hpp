#ifndef SCHEMELAB_SMOOTHNESS_HPP
#define SCHEMELAB_SMOOTHNESS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "schemelab/plot.hpp"

namespace schemelab {

enum class ProbeVerdict { smooth_consistent, jump_detected, inconclusive };

const char* to_string(ProbeVerdict v);

struct ProbeConfig {
  double h0 = 0.05;           // initial step
  int halvings = 5;           // >= 3
  double jump_threshold = 0;  // 0 selects 1e-3 * observable scale
};

struct ProbeSample {
  double h = 0;
  double derivative = 0;    // central difference at this h
  double defect = 0;        // |D_h - D_{2h}|, 0 for the coarsest step
  double onesided_gap = 0;  // |forward - backward| one-sided estimates
  double value_gap = 0;     // |F(p+h d) - F(p-h d)|
};

// Outcome of a finite-difference smoothness probe. The verdict is a
// numeric consistency statement, never a proof: "smooth-consistent" means
// the central differences converge at the expected rate, "jump-detected"
// means the one-sided estimates disagree persistently.
struct SmoothnessReport {
  std::vector<ProbeSample> samples;
  double derivative_estimate = 0;
  double observed_order = 0;
  double jump_magnitude = 0;  // value gap at the finest step when a jump is flagged
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
};

// CSV rows: h, D_h, defect, order_estimate, verdict.
void write_report_csv(const SmoothnessReport& report, std::ostream& out);

using BoxFunction = std::function<double(const std::vector<double>&)>;

// Central difference (F(p + h d) - F(p - h d)) / (2h). Both sample points
// must be strictly inside the box; F must return finite values.
double fd_derivative(const Box& box, const BoxFunction& f, const std::vector<double>& point,
                     const std::vector<double>& direction, double h);

SmoothnessReport probe_smoothness(const Box& box, const BoxFunction& f,
                                  const std::vector<double>& point,
                                  const std::vector<double>& direction,
                                  const ProbeConfig& config = {});

template <class Target>
double fd_derivative(const Plot<Target>& plot, std::function<double(const Target&)> observable,
                     const std::vector<double>& point, const std::vector<double>& direction,
                     double h) {
  BoxFunction f = [&plot, obs = std::move(observable)](const std::vector<double>& p) {
    return obs(plot.eval(p));
  };
  return fd_derivative(plot.domain, f, point, direction, h);
}

template <class Target>
SmoothnessReport probe_smoothness(const Plot<Target>& plot,
                                  std::function<double(const Target&)> observable,
                                  const std::vector<double>& point,
                                  const std::vector<double>& direction,
                                  const ProbeConfig& config = {}) {
  BoxFunction f = [&plot, obs = std::move(observable)](const std::vector<double>& p) {
    return obs(plot.eval(p));
  };
  return probe_smoothness(plot.domain, f, point, direction, config);
}

// 1-d conveniences.
double fd_derivative(const RealPlot& plot, double point, double h);
SmoothnessReport probe_smoothness(const RealPlot& plot, double point, const ProbeConfig& config = {});

}  // namespace schemelab

#endif
