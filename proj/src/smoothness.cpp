#include "schemelab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "schemelab/csv.hpp"

namespace schemelab {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double checked_eval(const Box& box, const BoxFunction& f, const std::vector<double>& p) {
  if (!box.contains_strict(p)) throw std::domain_error("probe: sample point outside domain box");
  const double v = f(p);
  if (!std::isfinite(v)) throw std::runtime_error("probe: non-finite observable value");
  return v;
}

std::vector<double> shifted(const std::vector<double>& point, const std::vector<double>& dir,
                            double h) {
  std::vector<double> p(point);
  for (size_t i = 0; i < p.size(); ++i) p[i] += h * dir[i];
  return p;
}

}  // namespace

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::smooth_consistent: return "smooth-consistent";
    case ProbeVerdict::jump_detected: return "jump-detected";
    case ProbeVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double fd_derivative(const Box& box, const BoxFunction& f, const std::vector<double>& point,
                     const std::vector<double>& direction, double h) {
  if (h <= 0) throw std::invalid_argument("fd_derivative: step must be positive");
  if (point.size() != direction.size() || static_cast<int>(point.size()) != box.dim())
    throw std::invalid_argument("fd_derivative: dimension mismatch");
  const double fp = checked_eval(box, f, shifted(point, direction, h));
  const double fm = checked_eval(box, f, shifted(point, direction, -h));
  return (fp - fm) / (2.0 * h);
}

SmoothnessReport probe_smoothness(const Box& box, const BoxFunction& f,
                                  const std::vector<double>& point,
                                  const std::vector<double>& direction,
                                  const ProbeConfig& config) {
  if (config.halvings < 3) throw std::invalid_argument("probe_smoothness: need at least 3 halvings");
  if (config.h0 <= 0) throw std::invalid_argument("probe_smoothness: h0 must be positive");

  SmoothnessReport report;
  const double f0 = checked_eval(box, f, point);

  double scale = std::max(1.0, std::abs(f0));
  for (int m = 0; m <= config.halvings; ++m) {
    const double h = std::ldexp(config.h0, -m);
    const double fp = checked_eval(box, f, shifted(point, direction, h));
    const double fm = checked_eval(box, f, shifted(point, direction, -h));
    scale = std::max({scale, std::abs(fp), std::abs(fm)});

    ProbeSample s;
    s.h = h;
    s.derivative = (fp - fm) / (2.0 * h);
    s.onesided_gap = std::abs((fp - f0) / h - (f0 - fm) / h);
    s.value_gap = std::abs(fp - fm);
    s.defect = report.samples.empty() ? 0.0
                                      : std::abs(s.derivative - report.samples.back().derivative);
    report.samples.push_back(s);
  }

  const auto& samples = report.samples;
  report.derivative_estimate = samples.back().derivative;

  const double threshold =
      config.jump_threshold > 0 ? config.jump_threshold : 1e-3 * scale;
  const double defect_floor = 1e-12 * std::max(1.0, std::abs(report.derivative_estimate));

  // One-sided disagreement that persists under halving signals a jump of
  // the value or of the slope; for a smooth map the gap shrinks like h.
  std::vector<double> gap_ratios;
  for (size_t m = 0; m + 1 < samples.size(); ++m) {
    const double a = samples[m].onesided_gap;
    const double b = samples[m + 1].onesided_gap;
    if (a == 0.0)
      gap_ratios.push_back(b == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    else
      gap_ratios.push_back(b / a);
  }
  const bool jump = samples.back().onesided_gap > threshold && median(gap_ratios) >= 0.75;

  // Observed order from the decay of consecutive-defect magnitudes.
  std::vector<double> order_fits;
  bool all_below_floor = true;
  for (size_t m = 1; m < samples.size(); ++m) {
    if (samples[m].defect > defect_floor) all_below_floor = false;
  }
  for (size_t m = 1; m + 1 < samples.size(); ++m) {
    const double a = samples[m].defect;
    const double b = samples[m + 1].defect;
    if (a > defect_floor && b > defect_floor) order_fits.push_back(std::log2(a / b));
  }
  if (all_below_floor)
    report.observed_order = std::numeric_limits<double>::infinity();
  else
    report.observed_order = median(order_fits);

  if (jump) {
    report.verdict = ProbeVerdict::jump_detected;
    report.jump_magnitude = samples.back().value_gap;
  } else if (all_below_floor || report.observed_order >= 1.5) {
    report.verdict = ProbeVerdict::smooth_consistent;
  } else {
    report.verdict = ProbeVerdict::inconclusive;
  }
  return report;
}

double fd_derivative(const RealPlot& plot, double point, double h) {
  BoxFunction f = [&plot](const std::vector<double>& p) { return plot.eval(p); };
  return fd_derivative(plot.domain, f, {point}, {1.0}, h);
}

SmoothnessReport probe_smoothness(const RealPlot& plot, double point, const ProbeConfig& config) {
  BoxFunction f = [&plot](const std::vector<double>& p) { return plot.eval(p); };
  return probe_smoothness(plot.domain, f, {point}, {1.0}, config);
}

void write_report_csv(const SmoothnessReport& report, std::ostream& out) {
  CsvTable table({"h", "D_h", "defect", "order_estimate", "verdict"});
  for (const auto& s : report.samples) {
    table.add_row({format_double(s.h), format_double(s.derivative), format_double(s.defect),
                   format_double(report.observed_order), to_string(report.verdict)});
  }
  table.write(out);
}

}  // namespace schemelab
