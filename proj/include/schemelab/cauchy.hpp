#ifndef SCHEMELAB_CAUCHY_HPP
#define SCHEMELAB_CAUCHY_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemelab/scaled_vector.hpp"

namespace schemelab {

enum class CauchyStatus { accepted, diverging, inconclusive };

const char* to_string(CauchyStatus s);

struct CauchyVerdict {
  CauchyStatus status = CauchyStatus::inconclusive;
  int level = 0;
  int n_star = -1;             // first difference index of the confirmation window
  double ratio_estimate = 0;   // robust (median) consecutive-difference ratio q
  double tail_bound = 0;       // (q / (1-q)) * d_last, only meaningful when q < 1
  int terms_used = 0;

  std::string one_line() const;
};

// Windowed contraction test over a stream of consecutive-difference norms.
// Accepts when the whole confirmation window is below tolerance with a
// median ratio q < 1; declares divergence when the window sits at or above
// tolerance with q >= 1. Smallness of differences alone never certifies:
// slowly thickening tails (harmonic-type) stay inconclusive.
//
// This is the single verdict code path shared by sequence tests, the
// implicit-function iteration, the Picard iteration and the mesh-refinement
// scheme.
class ConvergenceDetector {
 public:
  // min_diffs delays any verdict until that many differences have been
  // seen; callers with a known stabilization horizon use it to keep
  // stalled prefixes from certifying early.
  ConvergenceDetector(double tol, int window, int min_diffs = 0);

  CauchyStatus push(double diff);
  CauchyStatus status() const { return status_; }
  CauchyVerdict verdict(int level = 0) const;
  const std::vector<double>& diffs() const { return diffs_; }

 private:
  double tol_;
  int window_;
  int min_diffs_;
  std::vector<double> diffs_;
  CauchyStatus status_ = CauchyStatus::inconclusive;
  int n_star_ = -1;
  double ratio_ = 0;
  double tail_ = 0;
};

struct PoisonedTermError : std::runtime_error {
  int index;
  PoisonedTermError(int idx, const std::string& what)
      : std::runtime_error(what), index(idx) {}
};

struct NotCauchyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lazily generated sequence in a scaled space. The generator must be
// deterministic and must not call back into the same sequence (the memo
// lock is held during generation); terms are memoized, and concurrent
// ev() calls are safe (as-if-sequential). Generator failures or
// non-finite terms surface as PoisonedTermError carrying the offending
// index.
class CauchySequence {
 public:
  explicit CauchySequence(std::function<ScaledVector(int)> generator);

  ScaledVector ev(int k) const;
  int max_index_computed() const;

 private:
  std::function<ScaledVector(int)> gen_;
  struct State {
    std::mutex mu;
    std::vector<std::optional<ScaledVector>> memo;
    int max_computed = -1;
  };
  std::shared_ptr<State> state_;
};

// Streams ||x_{n+1} - x_n||_level through the detector until it fires or
// max_index terms have been inspected. min_index keeps verdicts from
// firing before that many terms.
CauchyVerdict is_cauchy(const CauchySequence& seq, int level, double tol, int window,
                        int max_index, int min_index = 0);

struct LimitEstimate {
  ScaledVector value;
  double tail_bound = 0;
  CauchyVerdict verdict;
};

// Returns the newest term after Cauchy acceptance, with the geometric tail
// bound attached; refuses (NotCauchyError) when the detector does not
// accept, so non-Cauchy data never acquires a "limit".
LimitEstimate limit_estimate(const CauchySequence& seq, int level, double tol, int window = 5,
                             int max_index = 10000, int min_index = 0);

struct CauchyTraceRow {
  int n;
  double d_n;
  double ratio;
  int level;
};

std::vector<CauchyTraceRow> cauchy_trace(const CauchySequence& seq, int level, int max_index);

}  // namespace schemelab

#endif
