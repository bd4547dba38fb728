#include "schemelab/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace schemelab {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double diff_ratio(double a, double b) {
  if (a == 0.0) return b == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return b / a;
}

}  // namespace

const char* to_string(CauchyStatus s) {
  switch (s) {
    case CauchyStatus::accepted: return "cauchy-accepted";
    case CauchyStatus::diverging: return "diverging";
    case CauchyStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string CauchyVerdict::one_line() const {
  std::ostringstream out;
  out << to_string(status) << " level=" << level << " N*=" << n_star
      << " ratio=" << ratio_estimate << " tail=" << tail_bound << " terms=" << terms_used;
  return out.str();
}

ConvergenceDetector::ConvergenceDetector(double tol, int window, int min_diffs)
    : tol_(tol), window_(window), min_diffs_(min_diffs) {
  if (tol <= 0) throw std::invalid_argument("ConvergenceDetector: tol must be positive");
  if (window < 3) throw std::invalid_argument("ConvergenceDetector: window must be >= 3");
  if (min_diffs < 0) throw std::invalid_argument("ConvergenceDetector: negative min_diffs");
}

CauchyStatus ConvergenceDetector::push(double diff) {
  if (status_ != CauchyStatus::inconclusive) return status_;
  if (!std::isfinite(diff) || diff < 0)
    throw std::invalid_argument("ConvergenceDetector: bad difference norm");
  diffs_.push_back(diff);

  const int m = static_cast<int>(diffs_.size()) - 1;
  if (m < window_ || static_cast<int>(diffs_.size()) < min_diffs_) return status_;

  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(window_));
  bool all_below_tol = true;
  bool all_at_least_tol = true;
  for (int i = m - window_; i < m; ++i) {
    ratios.push_back(diff_ratio(diffs_[static_cast<size_t>(i)], diffs_[static_cast<size_t>(i) + 1]));
  }
  for (int i = m - window_; i <= m; ++i) {
    const double d = diffs_[static_cast<size_t>(i)];
    if (d > tol_) all_below_tol = false;
    if (d < tol_) all_at_least_tol = false;
  }
  const double q = median(ratios);
  ratio_ = q;

  if (all_below_tol && q < 1.0) {
    status_ = CauchyStatus::accepted;
    n_star_ = m - window_;
    tail_ = q / (1.0 - q) * diffs_.back();
  } else if (all_at_least_tol && q >= 1.0) {
    status_ = CauchyStatus::diverging;
    n_star_ = m - window_;
  }
  return status_;
}

CauchyVerdict ConvergenceDetector::verdict(int level) const {
  CauchyVerdict v;
  v.status = status_;
  v.level = level;
  v.n_star = n_star_;
  v.ratio_estimate = ratio_;
  v.tail_bound = status_ == CauchyStatus::accepted ? tail_ : 0.0;
  v.terms_used = static_cast<int>(diffs_.size()) + 1;
  return v;
}

CauchySequence::CauchySequence(std::function<ScaledVector(int)> generator)
    : gen_(std::move(generator)), state_(std::make_shared<State>()) {
  if (!gen_) throw std::invalid_argument("CauchySequence: null generator");
}

ScaledVector CauchySequence::ev(int k) const {
  if (k < 0) throw std::invalid_argument("CauchySequence: negative index");
  std::lock_guard<std::mutex> lock(state_->mu);
  if (k < static_cast<int>(state_->memo.size()) && state_->memo[static_cast<size_t>(k)])
    return *state_->memo[static_cast<size_t>(k)];
  ScaledVector term = [&]() {
    try {
      return gen_(k);
    } catch (const std::exception& e) {
      throw PoisonedTermError(k, "CauchySequence: term " + std::to_string(k) + " poisoned: " + e.what());
    }
  }();
  if (k >= static_cast<int>(state_->memo.size())) state_->memo.resize(static_cast<size_t>(k) + 1);
  state_->memo[static_cast<size_t>(k)] = term;
  state_->max_computed = std::max(state_->max_computed, k);
  return term;
}

int CauchySequence::max_index_computed() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->max_computed;
}

namespace {

struct DetectorRun {
  ConvergenceDetector detector;
  int last_term = 0;  // highest term index evaluated
};

DetectorRun run_detector(const CauchySequence& seq, int level, double tol, int window,
                         int max_index, int min_index) {
  if (max_index < window + 2)
    throw std::invalid_argument("is_cauchy: max_index must be >= window + 2");
  if (min_index > max_index)
    throw std::invalid_argument("is_cauchy: min_index exceeds max_index");
  DetectorRun run{ConvergenceDetector(tol, window, min_index), 0};
  ScaledVector prev = seq.ev(0);
  for (int n = 0; n + 1 <= max_index; ++n) {
    ScaledVector next = seq.ev(n + 1);
    run.last_term = n + 1;
    const CauchyStatus s = run.detector.push(graded_norm(next - prev, level));
    if (s != CauchyStatus::inconclusive) break;
    prev = std::move(next);
  }
  return run;
}

}  // namespace

CauchyVerdict is_cauchy(const CauchySequence& seq, int level, double tol, int window,
                        int max_index, int min_index) {
  return run_detector(seq, level, tol, window, max_index, min_index).detector.verdict(level);
}

LimitEstimate limit_estimate(const CauchySequence& seq, int level, double tol, int window,
                             int max_index, int min_index) {
  DetectorRun run = run_detector(seq, level, tol, window, max_index, min_index);
  CauchyVerdict v = run.detector.verdict(level);
  if (v.status != CauchyStatus::accepted)
    throw NotCauchyError("limit_estimate: sequence not accepted as Cauchy (" + v.one_line() + ")");
  return LimitEstimate{seq.ev(run.last_term), v.tail_bound, v};
}

std::vector<CauchyTraceRow> cauchy_trace(const CauchySequence& seq, int level, int max_index) {
  std::vector<CauchyTraceRow> rows;
  double prev_d = 0;
  ScaledVector prev = seq.ev(0);
  for (int n = 0; n + 1 <= max_index; ++n) {
    ScaledVector next = seq.ev(n + 1);
    const double d = graded_norm(next - prev, level);
    rows.push_back({n, d, n == 0 ? 0.0 : diff_ratio(prev_d, d), level});
    prev_d = d;
    prev = std::move(next);
  }
  return rows;
}

}  // namespace schemelab
