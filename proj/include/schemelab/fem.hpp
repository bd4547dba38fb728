#ifndef SCHEMELAB_FEM_HPP
#define SCHEMELAB_FEM_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schemelab/cauchy.hpp"
#include "schemelab/mesh.hpp"
#include "schemelab/smoothness.hpp"
#include "schemelab/sparse.hpp"

namespace schemelab {

using LoadFunction = std::function<double(double, double)>;

enum class LoadQuadrature {
  edge_midpoint,  // 3-point rule at edge midpoints, exact for quadratics
  vertex          // 3-point rule at vertices, exact for affine integrands
};

// Galerkin system for the Dirichlet problem "Laplace u = f, u = 0 on the
// boundary" over interior hat functions. The weak matrix carries the
// literal pairing A_jk = -int grad(delta_j).grad(delta_k); the equivalent
// SPD system for CG is obtained by negating matrix and load.
struct AssembledSystem {
  CsrMatrix weak_matrix;
  std::vector<double> load;     // b_k = int f delta_k
  std::vector<int> interior;    // dof -> vertex index
  std::vector<int> dof_index;   // vertex -> dof index, -1 on the boundary
};

// Element stiffness int grad(hat_i).grad(hat_j) over one triangle; exact
// for P1 (gradients are constant).
std::array<std::array<double, 3>, 3> element_stiffness(const Triangulation& tri, int t);

AssembledSystem assemble(const Triangulation& tri, const LoadFunction& f,
                         LoadQuadrature quadrature = LoadQuadrature::edge_midpoint);

struct FemSolution {
  std::vector<double> coeffs;  // interior hat coefficients
  std::vector<double> nodal;   // all vertices, boundary entries zero
  int level = 0;
  double residual = 0;         // CG relative residual
  double energy = 0;           // 1/2 u^T S u - u^T b_spd
  int cg_iterations = 0;
};

// Assembles, flips signs to the SPD form, and runs CG to the requested
// relative residual. Throws on CG breakdown within the iteration cap,
// reporting the final residual.
FemSolution solve_poisson(const Triangulation& tri, const LoadFunction& f, double solver_tol = 1e-10,
                          LoadQuadrature quadrature = LoadQuadrature::edge_midpoint);

// P1 evaluation at a physical point (triangle walk); throws when the
// point lies outside the mesh. With a unit coefficient vector this is the
// hat function itself: 1 at its vertex, 0 at every other vertex.
double eval_nodal(const Triangulation& tri, std::span<const double> nodal, Point2 p);

// Solution text format: "level n", then one nodal value per line in
// vertex order.
void write_solution(const FemSolution& sol, std::ostream& out);
FemSolution read_solution(std::istream& in);

// Discrete H1_0 seminorm sqrt(int |grad u_h|^2) and inner product.
double h1_seminorm(const Triangulation& tri, std::span<const double> nodal);
double h1_inner(const Triangulation& tri, std::span<const double> a, std::span<const double> b);

struct FieldErrors {
  double h1 = 0;  // H1 seminorm of the error
  double l2 = 0;
};

FieldErrors solution_errors(const Triangulation& tri, std::span<const double> nodal,
                            const std::function<double(double, double)>& exact,
                            const std::function<Point2(double, double)>& exact_grad);

struct SchemeOptions {
  double solver_tol = 1e-10;
  // H1 scale below which successive differences may certify; the verdict
  // is taken on the finest available window, so this bounds the coarse
  // tail, not the first difference.
  double cauchy_tol = 2.0;
  int window = 3;
  LoadQuadrature quadrature = LoadQuadrature::edge_midpoint;
  std::function<double(double, double)> exact;       // optional error oracles
  std::function<Point2(double, double)> exact_grad;
};

struct SchemeDiagRow {
  int level = 0;
  int ndof = 0;
  double h_max = 0;
  double h1_error = 0;  // NaN without an oracle
  double l2_error = 0;
  double cauchy_diff = 0;  // ||u_l - P u_{l-1}||_H1 on the finest mesh, NaN at level 0
  double ratio = 0;
};

struct SchemeRun {
  std::vector<Triangulation> meshes;    // levels 0..L
  std::vector<FemSolution> solutions;
  std::vector<SchemeDiagRow> table;
  std::vector<double> h1_diffs;
  CauchyVerdict verdict;
  bool complete = true;
  std::string failure;
};

// Solves on mesh0 and L refinements, prolongs everything to the finest
// mesh and feeds the successive H1_0 differences to the shared Cauchy
// detector. Solver failures at a level leave a partial table.
SchemeRun run_scheme(const Triangulation& mesh0, const LoadFunction& f, int levels,
                     const SchemeOptions& opts = {});

// CSV: level, ndof, h_max, H1_error, L2_error, cauchy_diff, ratio.
std::string scheme_table_csv(const SchemeRun& run);

struct LinearityProbeResult {
  SmoothnessReport report;
  double superposition_defect = 0;    // max_t ||u(f0 + t df) - u(f0) - t u(df)||_H1
  double derivative_vector_defect = 0;  // ||(u(f0+df) - u(f0)) - u(df)||_H1
  double derivative_estimate = 0;     // probe of t -> <u(f0 + t df), u(df)>_H1
  double derivative_expected = 0;     // <u(df), u(df)>_H1
};

// The discrete solution map is linear in the load; verifies superposition
// at the finest level and probes the derivative along t -> f0 + t df.
LinearityProbeResult scheme_linearity_probe(const Triangulation& mesh0, const LoadFunction& f0,
                                            const LoadFunction& df, int levels,
                                            const SchemeOptions& opts = {});

struct PerturbationOptions {
  double area_floor = 1e-9;
  double solver_tol = 1e-10;
  LoadQuadrature quadrature = LoadQuadrature::edge_midpoint;
  std::vector<Point2> sample_points;  // defaults to triangle centroids near the vertex
  ProbeConfig probe;
};

// Moves one interior vertex of mesh0 along direction*t, refines, solves,
// and probes the mean of the solution at fixed sample points as a
// function of t. Amplitudes that collapse a triangle below the area floor
// are rejected. Returns one report per level 0..levels.
std::vector<SmoothnessReport> vertex_perturbation_probe(const Triangulation& mesh0,
                                                        const LoadFunction& f, int vertex,
                                                        Point2 direction, Interval amplitude,
                                                        int levels,
                                                        const PerturbationOptions& opts = {});

}  // namespace schemelab

#endif
