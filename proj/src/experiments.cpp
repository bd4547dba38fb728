#include "schemelab/experiments.hpp"

#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>

#include "schemelab/counterexample.hpp"
#include "schemelab/csv.hpp"
#include "schemelab/frobenius.hpp"
#include "schemelab/problems.hpp"

namespace schemelab {

ResidualTrace residual_trace(const SchemeProblem& problem, const ParamRecord& q, int max_n,
                             double tol) {
  if (max_n < 1) throw std::invalid_argument("residual_trace: max_n must be positive");
  ResidualTrace trace;
  CauchySequence seq = problem.scheme(q);
  for (int n = 0; n < max_n; ++n) {
    const ScaledVector term = seq.ev(n);
    trace.rows.emplace_back(n, problem.residual_norm(term, n, q));
  }
  if (trace.rows.size() >= 3) {
    trace.certified = true;
    for (size_t i = trace.rows.size() - 3; i < trace.rows.size(); ++i)
      trace.certified = trace.certified && trace.rows[i].second <= tol;
  }
  return trace;
}

SchemeProblem make_zero_scheme(int dim) {
  SchemeProblem problem;
  problem.name = "zero";
  problem.scheme = [dim](const ParamRecord&) {
    return CauchySequence([dim](int) { return ScaledVector::zero(dim); });
  };
  problem.residual_norm = [](const ScaledVector&, int, const ParamRecord&) { return 0.0; };
  return problem;
}

SchemeProblem make_ift_scheme(const ImplicitProblem& ift, const ScaledVector& x) {
  SchemeProblem problem;
  problem.name = "ift";
  problem.scheme = [ift, x](const ParamRecord&) {
    return CauchySequence([ift, x](int n) {
      ScaledVector y = ScaledVector::zero(ift.y_dim);
      for (int k = 0; k < n; ++k) y = phi_step(ift, x, y);
      return y;
    });
  };
  problem.residual_norm = [ift, x](const ScaledVector& term, int, const ParamRecord&) {
    return graded_norm(ift.f(x, term), 0);
  };
  return problem;
}

SchemeProblem make_fem_scheme(const Triangulation& mesh0, const LoadFunction& f, int levels,
                              double solver_tol) {
  SchemeOptions opts;
  opts.solver_tol = solver_tol;
  auto run = std::make_shared<SchemeRun>(run_scheme(mesh0, f, levels, opts));
  if (!run->complete) throw std::runtime_error("make_fem_scheme: " + run->failure);

  auto lift = [run](int n) {
    std::vector<double> nodal = run->solutions[static_cast<size_t>(n)].nodal;
    for (size_t m = static_cast<size_t>(n) + 1; m < run->meshes.size(); ++m)
      nodal = prolong_nodal(run->meshes[m], nodal);
    return nodal;
  };

  SchemeProblem problem;
  problem.name = "fem";
  problem.scheme = [run, lift, levels](const ParamRecord&) {
    return CauchySequence([run, lift, levels](int n) {
      if (n >= levels) throw std::out_of_range("fem scheme: term beyond computed levels");
      return ScaledVector(lift(n));
    });
  };
  // The dual-norm Galerkin residual of u_n against the next finer space
  // equals the energy distance |u_{n+1} - P u_n|_{H1}.
  problem.residual_norm = [run, levels](const ScaledVector&, int n, const ParamRecord&) {
    if (n >= levels) throw std::out_of_range("fem scheme: residual beyond computed levels");
    return run->h1_diffs[static_cast<size_t>(n)];
  };
  return problem;
}

bool ExperimentOutcome::all_pass() const {
  if (!ok) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool BundleResult::all_pass() const {
  for (const auto& o : outcomes) {
    if (!o.all_pass()) return false;
  }
  return true;
}

std::string BundleResult::report_text() const {
  std::ostringstream out;
  int passed = 0, failed = 0;
  for (const auto& o : outcomes) {
    if (!o.ok) {
      out << "[FAIL] " << o.name << ": error: " << o.error << "\n";
      ++failed;
      continue;
    }
    for (const auto& c : o.checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << o.name << ": " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
      ++(c.pass ? passed : failed);
    }
    for (const auto& f : o.files) out << "       " << o.name << " wrote " << f << "\n";
  }
  out << (failed == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " (" << passed << " passed, "
      << failed << " failed)\n";
  return out.str();
}

namespace {

struct Emitter {
  std::filesystem::path outdir;
  ExperimentOutcome* outcome;

  void emit(const std::string& filename, const std::string& content) const {
    write_file_atomic(outdir / filename, content);
    outcome->files.push_back(filename);
  }
};

void check(ExperimentOutcome& outcome, const std::string& name, bool pass,
           const std::string& detail) {
  outcome.checks.push_back({name, pass, detail});
}

double mean_log2_ratio(const std::vector<double>& values) {
  // Average convergence order between successive halvings.
  double sum = 0;
  int count = 0;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    sum += std::log2(values[i] / values[i + 1]);
    ++count;
  }
  return count ? sum / count : 0.0;
}

// ---------------------------------------------------------------------------
// fem-converge
// ---------------------------------------------------------------------------
void run_fem_converge(const ExperimentConfig& cfg, const Emitter& out, ExperimentOutcome& outcome) {
  const std::string mesh_name = cfg.get_string("mesh", "unit-square");
  const std::string problem = cfg.get_string("problem", "sinsin");
  const int levels = cfg.get_int("levels", 5);

  Triangulation mesh0;
  if (mesh_name == "unit-square")
    mesh0 = unit_square_mesh();
  else if (mesh_name == "l-shape")
    mesh0 = l_shape_mesh();
  else
    throw ConfigError("fem-converge: unknown mesh '" + mesh_name + "'");

  SchemeOptions opts;
  opts.solver_tol = cfg.get_double("solver_tol", 1e-10);
  opts.cauchy_tol = cfg.get_double("cauchy_tol", 2.0);
  opts.window = cfg.get_int("window", 3);

  LoadFunction f;
  if (problem == "sinsin") {
    f = sinsin_load();
    opts.exact = sinsin_exact();
    opts.exact_grad = sinsin_exact_grad();
  } else if (problem == "zero") {
    f = [](double, double) { return 0.0; };
  } else if (problem == "constant") {
    f = [](double, double) { return -1.0; };
  } else {
    throw ConfigError("fem-converge: unknown problem '" + problem + "'");
  }

  const SchemeRun run = run_scheme(mesh0, f, levels, opts);
  out.emit(cfg.name + ".diagnostics.csv", scheme_table_csv(run));
  if (!run.complete) {
    check(outcome, "scheme-complete", false, run.failure);
    return;
  }

  if (problem == "sinsin") {
    std::vector<double> l2s, h1s;
    for (const auto& row : run.table) {
      if (row.level >= 2) {
        l2s.push_back(row.l2_error);
        h1s.push_back(row.h1_error);
      }
    }
    const double l2_order = mean_log2_ratio(l2s);
    const double h1_order = mean_log2_ratio(h1s);
    check(outcome, "l2-order>=1.8", l2_order >= 1.8, "observed " + format_double(l2_order));
    check(outcome, "h1-order>=0.9", h1_order >= 0.9, "observed " + format_double(h1_order));

    if (levels >= 4) {
      const double center = eval_nodal(run.meshes[4], run.solutions[4].nodal, {0.5, 0.5});
      const double err = std::abs(center - 1.0);
      check(outcome, "center-error<=2e-2", err <= 2e-2, "error " + format_double(err));
    }
    const bool accepted = run.verdict.status == CauchyStatus::accepted;
    const double q = run.verdict.ratio_estimate;
    check(outcome, "h1-cauchy-accepted", accepted, run.verdict.one_line());
    check(outcome, "ratio-in-[0.4,0.6]", q >= 0.4 && q <= 0.6, "ratio " + format_double(q));
  } else if (problem == "zero") {
    double worst = 0;
    for (const auto& sol : run.solutions) {
      for (double v : sol.nodal) worst = std::max(worst, std::abs(v));
    }
    check(outcome, "zero-solution", worst == 0.0, "max |u| = " + format_double(worst));
    check(outcome, "trivially-cauchy", run.verdict.status == CauchyStatus::accepted,
          run.verdict.one_line());
  }
}

// ---------------------------------------------------------------------------
// ift-solve
// ---------------------------------------------------------------------------
void run_ift_solve(const ExperimentConfig& cfg, const Emitter& out, ExperimentOutcome& outcome) {
  const std::string problem_name = cfg.get_string("problem", "scalar-affine");
  SolveOptions opts;
  opts.tol = cfg.get_double("tol", 1e-12);
  opts.max_iter = cfg.get_int("max_iter", 1000);
  opts.window = cfg.get_int("window", 5);

  if (problem_name == "scalar-affine") {
    const int samples = cfg.get_int("samples", 20);
    const double xmin = cfg.get_double("xmin", -0.9);
    const double xmax = cfg.get_double("xmax", 0.9);
    const ImplicitProblem problem = affine_implicit_problem(1);

    CsvTable table({"x", "u", "closed_form", "abs_err", "status", "ratio", "residual0"});
    double worst_err = 0;
    bool all_accepted = true;
    bool residual_ok = true;
    bool banach_ok = true;
    for (int i = 0; i < samples; ++i) {
      const double x = xmin + (static_cast<double>(i) + 0.5) * (xmax - xmin) / samples;
      const ImplicitSolution sol = solve_implicit(problem, ScaledVector({x}), opts);
      const double closed = x / (1.0 + x);
      const double err = std::abs(sol.u[0] - closed);
      worst_err = std::max(worst_err, err);
      all_accepted = all_accepted && sol.accepted();
      residual_ok = residual_ok && sol.residual_norms[0] <= 10.0 * opts.tol;

      // A-posteriori contraction bound against the converged value, with
      // the analytic ratio q = |x|.
      const double q = std::abs(x);
      const double d0 = graded_norm(sol.iterates[1] - sol.iterates[0], 0);
      for (size_t n = 0; n < sol.iterates.size(); ++n) {
        const double gap = graded_norm(sol.u - sol.iterates[n], 0);
        const double bound = std::pow(q, static_cast<double>(n)) / (1.0 - q) * d0;
        if (gap > bound + 1e-15) banach_ok = false;
      }

      table.add_row({format_double(x), format_double(sol.u[0]), format_double(closed),
                     format_double(err), to_string(sol.verdict.status),
                     format_double(sol.verdict.ratio_estimate),
                     format_double(sol.residual_norms[0])});
    }
    out.emit(cfg.name + ".samples.csv", table.to_string());
    check(outcome, "all-accepted", all_accepted, "");
    check(outcome, "closed-form-agreement<=1e-8", worst_err <= 1e-8,
          "max error " + format_double(worst_err));
    check(outcome, "fixed-point-residual<=10tol", residual_ok, "");
    check(outcome, "banach-bound-holds", banach_ok, "");

    // Trace of a single solve in the serialization format.
    const double x_trace = cfg.get_double("x", 0.5);
    const ImplicitSolution sol = solve_implicit(problem, ScaledVector({x_trace}), opts);
    CsvTable trace({"n", "level", "d_n", "in_domain"});
    for (size_t li = 0; li < problem.levels.size(); ++li) {
      for (size_t n = 0; n < sol.level_traces[li].size(); ++n) {
        const bool inside = graded_norm(sol.iterates[n + 1], 0) < problem.y_radius;
        trace.add_row({format_int(static_cast<long long>(n)), format_int(problem.levels[li]),
                       format_double(sol.level_traces[li][n]), inside ? "1" : "0"});
      }
    }
    out.emit(cfg.name + ".trace.csv", trace.to_string());
  } else if (problem_name == "componentwise") {
    const int dim = 8;
    const ImplicitProblem problem = affine_implicit_problem(dim);
    std::vector<double> xs(dim);
    for (int k = 0; k < dim; ++k) xs[static_cast<size_t>(k)] = 0.5 / (1.0 + k);
    const ImplicitSolution sol = solve_implicit(problem, ScaledVector(xs), opts);
    double worst = 0;
    for (int k = 0; k < dim; ++k) {
      const double closed = xs[static_cast<size_t>(k)] / (1.0 + xs[static_cast<size_t>(k)]);
      worst = std::max(worst, std::abs(sol.u[k] - closed));
    }
    bool levels_ok = sol.in_domain;
    for (const auto& v : sol.level_verdicts) levels_ok = levels_ok && v.status == CauchyStatus::accepted;
    check(outcome, "componentwise-agreement<=1e-8", worst <= 1e-8, "max error " + format_double(worst));
    check(outcome, "certified-at-all-levels", levels_ok, "");

    CsvTable trace({"n", "level", "d_n", "in_domain"});
    for (size_t li = 0; li < problem.levels.size(); ++li) {
      for (size_t n = 0; n < sol.level_traces[li].size(); ++n) {
        const bool inside = graded_norm(sol.iterates[n + 1], 0) < problem.y_radius;
        trace.add_row({format_int(static_cast<long long>(n)), format_int(problem.levels[li]),
                       format_double(sol.level_traces[li][n]), inside ? "1" : "0"});
      }
    }
    out.emit(cfg.name + ".trace.csv", trace.to_string());
  } else {
    throw ConfigError("ift-solve: unknown problem '" + problem_name + "'");
  }
}

// ---------------------------------------------------------------------------
// ift-domain
// ---------------------------------------------------------------------------
void run_ift_domain(const ExperimentConfig& cfg, const Emitter& out, ExperimentOutcome& outcome) {
  SolveOptions opts;
  opts.tol = cfg.get_double("tol", 1e-12);
  opts.max_iter = cfg.get_int("max_iter", 1000);
  opts.window = cfg.get_int("window", 5);
  const double ray = cfg.get_double("ray", 1.0);
  const std::vector<double> steps = cfg.get_list("steps", {0.1, 0.3, 0.5, 0.7, 0.9, 1.5});

  const ImplicitProblem problem = affine_implicit_problem(1, 2.0, 1e6);
  const DomainProbeResult profile =
      domain_probe(problem, ScaledVector({ray}), steps, opts);

  CsvTable table({"magnitude", "status", "u_norm"});
  bool contraction_ok = true;
  bool pattern_ok = true;
  for (const auto& entry : profile) {
    table.add_row({format_double(entry.magnitude), to_string(entry.status),
                   format_double(entry.u_norm)});
    const bool should_accept = entry.magnitude < 1.0;
    const bool accepted = entry.status == CauchyStatus::accepted && entry.in_domain;
    if (should_accept != accepted) pattern_ok = false;
    if (std::abs(entry.ratio_estimate - entry.magnitude) > 0.05) contraction_ok = false;
    if (!should_accept && entry.ratio_estimate < 1.0) pattern_ok = false;
  }
  out.emit(cfg.name + ".profile.csv", table.to_string());
  check(outcome, "accept-below-1-reject-above", pattern_ok, "");
  check(outcome, "ratio-matches-|x|-within-0.05", contraction_ok, "");
}

// ---------------------------------------------------------------------------
// frobenius
// ---------------------------------------------------------------------------
void run_frobenius(const ExperimentConfig& cfg, const Emitter& out, ExperimentOutcome& outcome) {
  const std::string problem_name = cfg.get_string("problem", "exponential");
  FrobeniusOptions opts;
  opts.tol = cfg.get_double("tol", 1e-12);
  opts.max_iter = cfg.get_int("max_iter", 80);
  opts.window = cfg.get_int("window", 4);
  const double x = cfg.get_double("x", 1.0);
  const double y = cfg.get_double("y", 1.0);
  const std::vector<double> grids = cfg.get_list("grids", {50, 100, 200, 400});

  FrobeniusProblem problem =
      problem_name == "constant" ? constant_frobenius_problem(2.0) : exponential_frobenius_problem();
  const double expected = problem_name == "constant"
                              ? y + 2.0 * x
                              : y * std::exp(x - problem.x0[0]);

  // Grid study.
  CsvTable grid_table({"M", "J", "abs_error", "order"});
  std::vector<double> errors;
  for (size_t i = 0; i < grids.size(); ++i) {
    const int m = static_cast<int>(grids[i]);
    const FrobeniusSolution sol = solve_frobenius(problem, ScaledVector({x}), ScaledVector({y}), m, opts);
    const double err = std::abs(sol.j_value[0] - expected);
    errors.push_back(err);
    grid_table.add_row({format_int(m), format_double(sol.j_value[0]), format_double(err),
                        i == 0 ? "nan" : format_double(std::log2(errors[i - 1] / errors[i]))});
  }
  out.emit(cfg.name + ".grids.csv", grid_table.to_string());

  const int m_main = static_cast<int>(grids.size() >= 3 ? grids[2] : grids.back());
  const FrobeniusSolution sol =
      solve_frobenius(problem, ScaledVector({x}), ScaledVector({y}), m_main, opts);

  CsvTable alpha({"t", "c0"});
  for (size_t i = 0; i < sol.alpha.grid.size(); ++i)
    alpha.add_row({format_double(sol.alpha.grid[i]), format_double(sol.alpha.values[i][0])});
  out.emit(cfg.name + ".alpha.csv", alpha.to_string());

  CsvTable residuals({"iteration", "sup_diff", "residual"});
  for (size_t i = 0; i < sol.sup_diffs.size(); ++i)
    residuals.add_row({format_int(static_cast<long long>(i)), format_double(sol.sup_diffs[i]),
                       format_double(sol.residual_trace[i])});
  out.emit(cfg.name + ".residuals.csv", residuals.to_string());

  check(outcome, "picard-accepted", sol.accepted(), sol.verdict.one_line());
  if (problem_name == "exponential") {
    const double err_main = std::abs(sol.j_value[0] - expected);
    check(outcome, "|J-e|<=5e-4@M=200", err_main <= 5e-4, "error " + format_double(err_main));
    const double order = mean_log2_ratio(errors);
    check(outcome, "grid-order>=1.8", order >= 1.8, "observed " + format_double(order));
  } else {
    const double err_main = std::abs(sol.j_value[0] - expected);
    check(outcome, "constant-exact", err_main <= 1e-13, "error " + format_double(err_main));
  }

  // Identity at the base point for sampled y.
  double worst_identity = 0;
  for (int i = 0; i < 10; ++i) {
    const double yi = problem.y0[0] + (-0.9 + 0.2 * i);
    const FrobeniusSolution base =
        solve_frobenius(problem, problem.x0, ScaledVector({yi}), 50, opts);
    worst_identity = std::max(worst_identity, std::abs(base.j_value[0] - yi));
  }
  check(outcome, "identity-at-base<=1e-14", worst_identity <= 1e-14,
        "max |J(x0,y)-y| = " + format_double(worst_identity));
}

// ---------------------------------------------------------------------------
// probe
// ---------------------------------------------------------------------------
void run_probe(const ExperimentConfig& cfg, const Emitter& out, ExperimentOutcome& outcome) {
  const std::string target = cfg.get_string("target", "cubic");
  ProbeConfig probe;
  probe.h0 = cfg.get_double("h0", 0.05);
  probe.halvings = cfg.get_int("halvings", 5);
  probe.jump_threshold = cfg.get_double("jump_threshold", 0.0);
  const double point = cfg.get_double("point", 0.3);

  RealPlot plot;
  ProbeVerdict expected = ProbeVerdict::smooth_consistent;
  if (target == "cubic") {
    plot = interval_plot(-1.0, 1.0, [](double t) { return t * t * t; });
  } else if (target == "quadratic") {
    plot = interval_plot(-1.0, 1.0, [](double t) { return t * t; });
  } else if (target == "sin") {
    plot = interval_plot(-4.0, 4.0, [](double t) { return std::sin(t); });
  } else if (target == "abs") {
    plot = interval_plot(-1.0, 1.0, [](double t) { return std::abs(t); });
    expected = ProbeVerdict::jump_detected;
  } else {
    throw ConfigError("probe: unknown target '" + target + "'");
  }

  const SmoothnessReport report = probe_smoothness(plot, point, probe);
  std::ostringstream csv;
  write_report_csv(report, csv);
  out.emit(cfg.name + ".report.csv", csv.str());
  check(outcome, std::string("verdict-") + to_string(expected), report.verdict == expected,
        std::string("got ") + to_string(report.verdict));
}

// ---------------------------------------------------------------------------
// counterexample
// ---------------------------------------------------------------------------
void run_counterexample(const ExperimentConfig& cfg, const Emitter& out,
                        ExperimentOutcome& outcome) {
  const ScaledVector x({cfg.get_double("x", 0.0)});
  const ScaledVector y({cfg.get_double("y", 1.0)});
  const int kmax = cfg.get_int("kmax", 10);
  const double tol = cfg.get_double("tol", 1e-10);
  const int max_index = cfg.get_int("max_index", 5000);

  // Jump of the limit map at t = 0.
  ProbeConfig probe;
  probe.h0 = 0.05;
  probe.halvings = 5;
  const RealPlot limit_plot = path_limit_plot(x, y, 0, tol, 5, max_index);
  const SmoothnessReport at_zero = probe_smoothness(limit_plot, 0.0, probe);
  std::ostringstream csv;
  write_report_csv(at_zero, csv);
  out.emit(cfg.name + ".limit_probe.csv", csv.str());

  const double expected_jump = std::abs(y[0] - x[0]);
  check(outcome, "limit-jump-detected", at_zero.verdict == ProbeVerdict::jump_detected,
        std::string("got ") + to_string(at_zero.verdict));
  check(outcome, "jump-magnitude", std::abs(at_zero.jump_magnitude - expected_jump) <= 1e-6,
        "magnitude " + format_double(at_zero.jump_magnitude));

  // Term maps stay smooth at every seam.
  CsvTable seams({"k", "seam_t", "verdict", "derivative"});
  bool all_smooth = true;
  for (int k = 0; k <= kmax; ++k) {
    const auto [lo, hi] = path_seam(k);
    for (double seam : {lo, hi}) {
      ProbeConfig seam_probe;
      seam_probe.h0 = 0.5 * (hi - lo);
      seam_probe.halvings = 6;
      const SmoothnessReport report = probe_smoothness(path_term_plot(x, y, k), seam, seam_probe);
      seams.add_row({format_int(k), format_double(seam), to_string(report.verdict),
                     format_double(report.derivative_estimate)});
      all_smooth = all_smooth && report.verdict == ProbeVerdict::smooth_consistent;
    }
  }
  out.emit(cfg.name + ".seams.csv", seams.to_string());
  check(outcome, "term-maps-smooth-at-seams", all_smooth, "k <= " + format_int(kmax));

  // Cauchy trace of one path sequence.
  const double trace_t = cfg.get_double("trace_t", 0.35);
  CauchySequence seq = path_sequence(x, y, trace_t);
  CsvTable trace({"n", "d_n", "ratio", "level"});
  for (const auto& row : cauchy_trace(seq, 0, 30)) {
    trace.add_row({format_int(row.n), format_double(row.d_n), format_double(row.ratio),
                   format_int(row.level)});
  }
  out.emit(cfg.name + ".trace.csv", trace.to_string());
}

}  // namespace

BundleResult run_experiments(const std::vector<ExperimentConfig>& experiments,
                             const std::filesystem::path& outdir, std::uint64_t seed,
                             bool verbose) {
  (void)seed;
  validate_config(experiments);
  std::filesystem::create_directories(outdir);

  BundleResult bundle;
  for (const auto& cfg : experiments) {
    ExperimentOutcome outcome;
    outcome.name = cfg.name;
    Emitter out{outdir, &outcome};
    try {
      if (cfg.kind == "fem-converge")
        run_fem_converge(cfg, out, outcome);
      else if (cfg.kind == "ift-solve")
        run_ift_solve(cfg, out, outcome);
      else if (cfg.kind == "ift-domain")
        run_ift_domain(cfg, out, outcome);
      else if (cfg.kind == "frobenius")
        run_frobenius(cfg, out, outcome);
      else if (cfg.kind == "probe")
        run_probe(cfg, out, outcome);
      else if (cfg.kind == "counterexample")
        run_counterexample(cfg, out, outcome);
      else
        throw ConfigError("unknown kind '" + cfg.kind + "'");
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.error = e.what();
    }
    if (verbose) {
      for (const auto& c : outcome.checks)
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << outcome.name << ": " << c.name << "\n";
      if (!outcome.ok) std::cerr << "[FAIL] " << outcome.name << ": " << outcome.error << "\n";
    }
    bundle.outcomes.push_back(std::move(outcome));
  }
  write_file_atomic(outdir / "report.txt", bundle.report_text());
  return bundle;
}

}  // namespace schemelab
