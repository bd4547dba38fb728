#ifndef SCHEMELAB_EXPERIMENTS_HPP
#define SCHEMELAB_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schemelab/cauchy.hpp"
#include "schemelab/config.hpp"
#include "schemelab/fem.hpp"
#include "schemelab/ift.hpp"
#include "schemelab/scaled_vector.hpp"

namespace schemelab {

// Finite-dimensional parameter record; richer parameter spaces enter
// through the factory closures.
struct ParamRecord {
  std::map<std::string, double> values;

  double get(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
};

// A residual F together with a scheme Num producing approximants: an
// accepted run drives ||F(x_n, q)|| to zero along the sequence.
struct SchemeProblem {
  std::string name;
  std::function<CauchySequence(const ParamRecord&)> scheme;
  std::function<double(const ScaledVector& term, int n, const ParamRecord&)> residual_norm;
};

struct ResidualTrace {
  std::vector<std::pair<int, double>> rows;  // (n, ||F(x_n)||)
  bool certified = false;                    // last 3 values at or below tol
};

ResidualTrace residual_trace(const SchemeProblem& problem, const ParamRecord& q, int max_n,
                             double tol);

SchemeProblem make_zero_scheme(int dim);
// Num = the fixed-point iterates at x; F = f itself.
SchemeProblem make_ift_scheme(const ImplicitProblem& problem, const ScaledVector& x);
// Num = Galerkin solutions prolonged to the finest mesh; F = the Galerkin
// residual measured on the next finer mesh (terms n in [0, levels)).
SchemeProblem make_fem_scheme(const Triangulation& mesh0, const LoadFunction& f, int levels,
                              double solver_tol);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentOutcome {
  std::string name;
  bool ok = true;  // ran to completion
  std::string error;
  std::vector<CheckResult> checks;
  std::vector<std::string> files;

  bool all_pass() const;
};

struct BundleResult {
  std::vector<ExperimentOutcome> outcomes;

  bool all_pass() const;
  std::string report_text() const;
};

// Validates the whole bundle strictly, then runs each experiment,
// recording per-experiment failures without aborting the rest. CSV
// artifacts and report.txt land in outdir; identical configs produce
// byte-identical CSV bodies. The seed is reserved for randomized
// extensions; the built-in experiments are deterministic.
BundleResult run_experiments(const std::vector<ExperimentConfig>& experiments,
                             const std::filesystem::path& outdir, std::uint64_t seed = 0,
                             bool verbose = false);

}  // namespace schemelab

#endif
