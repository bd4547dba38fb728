#include "schemelab/fem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "schemelab/csv.hpp"

namespace schemelab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TriangleGeometry {
  Point2 p[3];
  double area;
  Point2 grad[3];  // hat gradients, constant over the triangle
};

TriangleGeometry triangle_geometry(const Triangulation& tri, int t) {
  const auto& idx = tri.triangles[static_cast<size_t>(t)];
  TriangleGeometry g;
  for (int i = 0; i < 3; ++i) g.p[i] = tri.vertices[static_cast<size_t>(idx[i])];
  g.area = tri.triangle_area(t);
  const double s = 1.0 / (2.0 * g.area);
  for (int i = 0; i < 3; ++i) {
    const Point2& a = g.p[(i + 1) % 3];
    const Point2& b = g.p[(i + 2) % 3];
    g.grad[i] = {s * (a.y - b.y), s * (b.x - a.x)};
  }
  return g;
}

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

double checked_load(const LoadFunction& f, Point2 p) {
  const double v = f(p.x, p.y);
  if (!std::isfinite(v)) throw std::runtime_error("assemble: non-finite load sample");
  return v;
}

}  // namespace

std::array<std::array<double, 3>, 3> element_stiffness(const Triangulation& tri, int t) {
  const TriangleGeometry g = triangle_geometry(tri, t);
  std::array<std::array<double, 3>, 3> k{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) k[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.area * dot(g.grad[i], g.grad[j]);
  }
  return k;
}

AssembledSystem assemble(const Triangulation& tri, const LoadFunction& f,
                         LoadQuadrature quadrature) {
  AssembledSystem sys{CsrMatrix{}, {}, {}, std::vector<int>(static_cast<size_t>(tri.n_vertices()), -1)};
  for (int v = 0; v < tri.n_vertices(); ++v) {
    if (!tri.is_boundary[static_cast<size_t>(v)]) {
      sys.dof_index[static_cast<size_t>(v)] = static_cast<int>(sys.interior.size());
      sys.interior.push_back(v);
    }
  }
  const int ndof = static_cast<int>(sys.interior.size());
  sys.load.assign(static_cast<size_t>(ndof), 0.0);

  std::vector<std::tuple<int, int, double>> triplets;
  for (int t = 0; t < tri.n_triangles(); ++t) {
    const auto& idx = tri.triangles[static_cast<size_t>(t)];
    const auto k = element_stiffness(tri, t);
    const TriangleGeometry g = triangle_geometry(tri, t);

    for (int i = 0; i < 3; ++i) {
      const int di = sys.dof_index[static_cast<size_t>(idx[i])];
      if (di < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int dj = sys.dof_index[static_cast<size_t>(idx[j])];
        if (dj < 0) continue;
        // Weak pairing of "Laplace u = f": minus the Dirichlet energy.
        triplets.emplace_back(di, dj, -k[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      }

      if (quadrature == LoadQuadrature::vertex) {
        sys.load[static_cast<size_t>(di)] += g.area / 3.0 * checked_load(f, g.p[i]);
      } else {
        // Edge midpoints adjacent to vertex i carry hat value 1/2.
        const Point2 m_ij = 0.5 * (g.p[i] + g.p[(i + 1) % 3]);
        const Point2 m_ki = 0.5 * (g.p[(i + 2) % 3] + g.p[i]);
        sys.load[static_cast<size_t>(di)] +=
            g.area / 3.0 * 0.5 * (checked_load(f, m_ij) + checked_load(f, m_ki));
      }
    }
  }
  sys.weak_matrix = CsrMatrix::from_triplets(ndof, std::move(triplets));
  return sys;
}

FemSolution solve_poisson(const Triangulation& tri, const LoadFunction& f, double solver_tol,
                          LoadQuadrature quadrature) {
  const AssembledSystem sys = assemble(tri, f, quadrature);
  const CsrMatrix spd = sys.weak_matrix.scaled(-1.0);
  std::vector<double> rhs(sys.load.size());
  for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = -sys.load[i];

  FemSolution sol;
  const CgResult cg = conjugate_gradient(spd, rhs, sol.coeffs, CgOptions{solver_tol, 0, false});
  if (!cg.converged) {
    std::ostringstream msg;
    msg << "solve_poisson: CG did not converge (relative residual " << cg.relative_residual << ")";
    throw std::runtime_error(msg.str());
  }
  sol.level = tri.level;
  sol.residual = cg.relative_residual;
  sol.cg_iterations = cg.iterations;
  sol.nodal.assign(static_cast<size_t>(tri.n_vertices()), 0.0);
  for (size_t d = 0; d < sys.interior.size(); ++d)
    sol.nodal[static_cast<size_t>(sys.interior[d])] = sol.coeffs[d];

  const std::vector<double> su = spd.multiply(sol.coeffs);
  double energy = 0;
  for (size_t i = 0; i < sol.coeffs.size(); ++i)
    energy += 0.5 * sol.coeffs[i] * su[i] - sol.coeffs[i] * rhs[i];
  sol.energy = energy;
  return sol;
}

double eval_nodal(const Triangulation& tri, std::span<const double> nodal, Point2 p) {
  if (static_cast<int>(nodal.size()) != tri.n_vertices())
    throw std::invalid_argument("eval_nodal: nodal vector size mismatch");
  for (int t = 0; t < tri.n_triangles(); ++t) {
    const auto& idx = tri.triangles[static_cast<size_t>(t)];
    const Point2 a = tri.vertices[static_cast<size_t>(idx[0])];
    const Point2 b = tri.vertices[static_cast<size_t>(idx[1])];
    const Point2 c = tri.vertices[static_cast<size_t>(idx[2])];
    const double area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    const double la = ((b.x - p.x) * (c.y - p.y) - (b.y - p.y) * (c.x - p.x)) / area2;
    const double lb = ((c.x - p.x) * (a.y - p.y) - (c.y - p.y) * (a.x - p.x)) / area2;
    const double lc = 1.0 - la - lb;
    if (la >= -1e-12 && lb >= -1e-12 && lc >= -1e-12) {
      return la * nodal[static_cast<size_t>(idx[0])] + lb * nodal[static_cast<size_t>(idx[1])] +
             lc * nodal[static_cast<size_t>(idx[2])];
    }
  }
  throw std::domain_error("eval_nodal: point outside the mesh");
}

void write_solution(const FemSolution& sol, std::ostream& out) {
  out << "level " << sol.level << '\n';
  for (double v : sol.nodal) out << format_double(v) << '\n';
}

FemSolution read_solution(std::istream& in) {
  std::string keyword;
  FemSolution sol;
  if (!(in >> keyword >> sol.level) || keyword != "level")
    throw std::runtime_error("read_solution: expected 'level n'");
  double v = 0;
  while (in >> v) sol.nodal.push_back(v);
  return sol;
}

double h1_inner(const Triangulation& tri, std::span<const double> a, std::span<const double> b) {
  double sum = 0;
  for (int t = 0; t < tri.n_triangles(); ++t) {
    const TriangleGeometry g = triangle_geometry(tri, t);
    const auto& idx = tri.triangles[static_cast<size_t>(t)];
    Point2 ga{0, 0}, gb{0, 0};
    for (int i = 0; i < 3; ++i) {
      ga = ga + a[static_cast<size_t>(idx[i])] * g.grad[i];
      gb = gb + b[static_cast<size_t>(idx[i])] * g.grad[i];
    }
    sum += g.area * dot(ga, gb);
  }
  return sum;
}

double h1_seminorm(const Triangulation& tri, std::span<const double> nodal) {
  return std::sqrt(std::max(0.0, h1_inner(tri, nodal, nodal)));
}

FieldErrors solution_errors(const Triangulation& tri, std::span<const double> nodal,
                            const std::function<double(double, double)>& exact,
                            const std::function<Point2(double, double)>& exact_grad) {
  FieldErrors err;
  double l2 = 0, h1 = 0;
  for (int t = 0; t < tri.n_triangles(); ++t) {
    const TriangleGeometry g = triangle_geometry(tri, t);
    const auto& idx = tri.triangles[static_cast<size_t>(t)];
    Point2 grad_h{0, 0};
    for (int i = 0; i < 3; ++i) grad_h = grad_h + nodal[static_cast<size_t>(idx[i])] * g.grad[i];
    for (int i = 0; i < 3; ++i) {
      const Point2 m = 0.5 * (g.p[i] + g.p[(i + 1) % 3]);
      const double uh = 0.5 * (nodal[static_cast<size_t>(idx[i])] + nodal[static_cast<size_t>(idx[(i + 1) % 3])]);
      const double dv = uh - exact(m.x, m.y);
      l2 += g.area / 3.0 * dv * dv;
      const Point2 dg = grad_h - exact_grad(m.x, m.y);
      h1 += g.area / 3.0 * dot(dg, dg);
    }
  }
  err.l2 = std::sqrt(l2);
  err.h1 = std::sqrt(h1);
  return err;
}

SchemeRun run_scheme(const Triangulation& mesh0, const LoadFunction& f, int levels,
                     const SchemeOptions& opts) {
  if (levels < 2) throw std::invalid_argument("run_scheme: need at least 2 levels");
  SchemeRun run;
  run.meshes.push_back(mesh0);
  for (int l = 1; l <= levels; ++l) run.meshes.push_back(refine(run.meshes.back()));

  for (int l = 0; l <= levels; ++l) {
    try {
      run.solutions.push_back(solve_poisson(run.meshes[static_cast<size_t>(l)], f, opts.solver_tol, opts.quadrature));
    } catch (const std::exception& e) {
      run.complete = false;
      run.failure = "level " + std::to_string(l) + ": " + e.what();
      break;
    }
  }
  const int solved = static_cast<int>(run.solutions.size()) - 1;
  if (solved < 0) return run;

  // Prolong every solution to the finest computed mesh and measure the
  // successive H1_0 differences there; nesting makes prolongation exact.
  const Triangulation& finest = run.meshes[static_cast<size_t>(solved)];
  std::vector<std::vector<double>> lifted;
  for (int l = 0; l <= solved; ++l) {
    std::vector<double> nodal = run.solutions[static_cast<size_t>(l)].nodal;
    for (int m = l + 1; m <= solved; ++m) nodal = prolong_nodal(run.meshes[static_cast<size_t>(m)], nodal);
    lifted.push_back(std::move(nodal));
  }

  // Verdict on the full difference list: the window then covers the most
  // refined levels instead of freezing on the first coarse acceptance.
  ConvergenceDetector detector(opts.cauchy_tol, opts.window, solved);
  for (int l = 0; l + 1 <= solved; ++l) {
    std::vector<double> diff(lifted[static_cast<size_t>(l) + 1].size());
    for (size_t i = 0; i < diff.size(); ++i)
      diff[i] = lifted[static_cast<size_t>(l) + 1][i] - lifted[static_cast<size_t>(l)][i];
    const double d = h1_seminorm(finest, diff);
    run.h1_diffs.push_back(d);
    detector.push(d);
  }
  run.verdict = detector.verdict(0);

  for (int l = 0; l <= solved; ++l) {
    const Triangulation& mesh = run.meshes[static_cast<size_t>(l)];
    SchemeDiagRow row;
    row.level = l;
    row.ndof = static_cast<int>(run.solutions[static_cast<size_t>(l)].coeffs.size());
    row.h_max = mesh.h_max();
    if (opts.exact && opts.exact_grad) {
      const FieldErrors e = solution_errors(mesh, run.solutions[static_cast<size_t>(l)].nodal, opts.exact, opts.exact_grad);
      row.h1_error = e.h1;
      row.l2_error = e.l2;
    } else {
      row.h1_error = kNaN;
      row.l2_error = kNaN;
    }
    row.cauchy_diff = l >= 1 ? run.h1_diffs[static_cast<size_t>(l) - 1] : kNaN;
    row.ratio = l >= 2 ? run.h1_diffs[static_cast<size_t>(l) - 1] / run.h1_diffs[static_cast<size_t>(l) - 2] : kNaN;
    run.table.push_back(row);
  }
  return run;
}

std::string scheme_table_csv(const SchemeRun& run) {
  CsvTable table({"level", "ndof", "h_max", "H1_error", "L2_error", "cauchy_diff", "ratio"});
  for (const auto& row : run.table) {
    table.add_row({format_int(row.level), format_int(row.ndof), format_double(row.h_max),
                   format_double(row.h1_error), format_double(row.l2_error),
                   format_double(row.cauchy_diff), format_double(row.ratio)});
  }
  return table.to_string();
}

LinearityProbeResult scheme_linearity_probe(const Triangulation& mesh0, const LoadFunction& f0,
                                            const LoadFunction& df, int levels,
                                            const SchemeOptions& opts) {
  Triangulation mesh = mesh0;
  for (int l = 0; l < levels; ++l) mesh = refine(mesh);

  const auto solve_at = [&](double t) {
    const LoadFunction combined = [&f0, &df, t](double x, double y) { return f0(x, y) + t * df(x, y); };
    return solve_poisson(mesh, combined, opts.solver_tol, opts.quadrature);
  };

  const FemSolution u0 = solve_at(0.0);
  const FemSolution du = solve_poisson(mesh, df, opts.solver_tol, opts.quadrature);

  LinearityProbeResult result;
  auto h1_diff = [&](const std::vector<double>& a, const std::vector<double>& b,
                     const std::vector<double>& c, double t) {
    std::vector<double> w(a.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = a[i] - b[i] - t * c[i];
    return h1_seminorm(mesh, w);
  };
  for (double t : {0.5, 1.0}) {
    const FemSolution ut = solve_at(t);
    result.superposition_defect =
        std::max(result.superposition_defect, h1_diff(ut.nodal, u0.nodal, du.nodal, t));
    if (t == 1.0) {
      std::vector<double> w(ut.nodal.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = ut.nodal[i] - u0.nodal[i] - du.nodal[i];
      result.derivative_vector_defect = h1_seminorm(mesh, w);
    }
  }

  RealPlot plot = interval_plot(-1.0, 2.0, [&](double t) {
    const FemSolution ut = solve_at(t);
    return h1_inner(mesh, ut.nodal, du.nodal);
  });
  ProbeConfig probe;
  probe.h0 = 0.25;
  probe.halvings = 3;
  result.report = probe_smoothness(plot, 0.5, probe);
  result.derivative_estimate = result.report.derivative_estimate;
  result.derivative_expected = h1_inner(mesh, du.nodal, du.nodal);
  return result;
}

std::vector<SmoothnessReport> vertex_perturbation_probe(const Triangulation& mesh0,
                                                        const LoadFunction& f, int vertex,
                                                        Point2 direction, Interval amplitude,
                                                        int levels,
                                                        const PerturbationOptions& opts) {
  if (vertex < 0 || vertex >= mesh0.n_vertices())
    throw std::invalid_argument("vertex_perturbation_probe: bad vertex");
  if (mesh0.is_boundary[static_cast<size_t>(vertex)])
    throw std::invalid_argument("vertex_perturbation_probe: vertex must be interior");

  // Default observation points: centroids of triangles not touching the
  // moving vertex, so the sample points stay in fixed triangles.
  std::vector<Point2> samples = opts.sample_points;
  if (samples.empty()) {
    for (int t = 0; t < mesh0.n_triangles() && samples.size() < 4; ++t) {
      const auto& idx = mesh0.triangles[static_cast<size_t>(t)];
      if (idx[0] == vertex || idx[1] == vertex || idx[2] == vertex) continue;
      const Point2 a = mesh0.vertices[static_cast<size_t>(idx[0])];
      const Point2 b = mesh0.vertices[static_cast<size_t>(idx[1])];
      const Point2 c = mesh0.vertices[static_cast<size_t>(idx[2])];
      samples.push_back((1.0 / 3.0) * (a + b + c));
    }
    if (samples.empty())
      throw std::invalid_argument("vertex_perturbation_probe: no sample points available");
  }

  const auto perturbed = [&](double t) {
    Triangulation mesh = mesh0;
    mesh.vertices[static_cast<size_t>(vertex)] =
        mesh.vertices[static_cast<size_t>(vertex)] + t * direction;
    for (int tr = 0; tr < mesh.n_triangles(); ++tr) {
      if (mesh.triangle_area(tr) < opts.area_floor)
        throw std::domain_error("vertex_perturbation_probe: triangle area below validity floor");
    }
    return mesh;
  };

  std::vector<SmoothnessReport> reports;
  for (int level = 0; level <= levels; ++level) {
    RealPlot plot;
    plot.domain = Box{{amplitude}};
    plot.eval = [&, level](const std::vector<double>& p) {
      Triangulation mesh = perturbed(p[0]);
      for (int l = 0; l < level; ++l) mesh = refine(mesh);
      const FemSolution sol = solve_poisson(mesh, f, opts.solver_tol, opts.quadrature);
      double mean = 0;
      for (const Point2& s : samples) mean += eval_nodal(mesh, sol.nodal, s);
      return mean / static_cast<double>(samples.size());
    };
    const double mid = 0.5 * (amplitude.lo + amplitude.hi);
    reports.push_back(probe_smoothness(plot, mid, opts.probe));
  }
  return reports;
}

}  // namespace schemelab
