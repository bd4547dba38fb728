#ifndef SCHEMELAB_MESH_HPP
#define SCHEMELAB_MESH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace schemelab {

struct Point2 {
  double x = 0;
  double y = 0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

// Conforming triangulation of a polygonal domain. Triangles are
// counterclockwise index triples; two triangles meet only along shared
// edges or vertices, and the triangle areas sum to the polygon area.
struct Triangulation {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::uint8_t> is_boundary;
  int level = 0;
  double domain_area = 0;

  // Refinement bookkeeping: vertex parent_vertex_count + e is the midpoint
  // of the parent edge midpoint_parents[e]. Empty for base meshes.
  int parent_vertex_count = 0;
  std::vector<std::array<int, 2>> midpoint_parents;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }
  std::vector<std::array<int, 2>> edges() const;  // sorted unique vertex pairs
  int n_edges() const { return static_cast<int>(edges().size()); }
  double triangle_area(int t) const;
  double h_max() const;  // longest edge
  std::vector<int> interior_vertices() const;
};

// Ear-clipping triangulation of a simple counterclockwise polygon.
// Rejects clockwise, self-intersecting and zero-area input.
Triangulation base_mesh(const std::vector<Point2>& polygon);

// Canonical fixtures: the unit square (4 vertices, 2 triangles) and the
// L-shape [0,1]^2 minus the open upper-right quadrant (8 vertices,
// 6 triangles), both hand-triangulated.
Triangulation unit_square_mesh();
Triangulation l_shape_mesh();

// Uniform refinement by edge midpoints: every triangle splits into four
// congruent children; vertices(n+1) = vertices(n) + edges(n) and
// triangles(n+1) = 4 triangles(n). Midpoints of boundary edges are
// boundary vertices.
Triangulation refine(const Triangulation& tri);

// Checks orientation, conformity, the covering identity (triangle areas
// sum to the domain area) and boundary flags; throws std::runtime_error
// with the violated property.
void validate_triangulation(const Triangulation& tri);

// Nodal P1 prolongation from the parent of `fine` onto `fine`: values at
// old vertices are kept, midpoints average their edge endpoints. Exact on
// piecewise-affine functions of the parent mesh.
std::vector<double> prolong_nodal(const Triangulation& fine, std::span<const double> coarse_nodal);

// Text format: "vertices N" then N lines "x y boundary_flag",
// "triangles M" then M lines "i j k" (0-based).
void write_mesh(const Triangulation& tri, std::ostream& out);
Triangulation read_mesh(std::istream& in);

}  // namespace schemelab

#endif
