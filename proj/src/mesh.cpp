#include "schemelab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "schemelab/csv.hpp"

namespace schemelab {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double polygon_area(const std::vector<Point2>& poly) {
  double twice = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    twice += p.x * q.y - p.y * q.x;
  }
  return 0.5 * twice;
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Inside or on the boundary; boundary contact must block an ear, or a
// reflex vertex sitting exactly on the candidate's edge slips through.
bool point_blocks_ear(Point2 p, Point2 a, Point2 b, Point2 c) {
  const double e = 1e-14;
  return cross(a, b, p) >= -e && cross(b, c, p) >= -e && cross(c, a, p) >= -e;
}

std::array<int, 2> sorted_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

std::vector<std::array<int, 2>> Triangulation::edges() const {
  std::vector<std::array<int, 2>> all;
  all.reserve(triangles.size() * 3);
  for (const auto& t : triangles) {
    all.push_back(sorted_edge(t[0], t[1]));
    all.push_back(sorted_edge(t[1], t[2]));
    all.push_back(sorted_edge(t[2], t[0]));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

double Triangulation::triangle_area(int t) const {
  const auto& tri = triangles[static_cast<size_t>(t)];
  return 0.5 * cross(vertices[static_cast<size_t>(tri[0])], vertices[static_cast<size_t>(tri[1])],
                     vertices[static_cast<size_t>(tri[2])]);
}

double Triangulation::h_max() const {
  double h = 0;
  for (const auto& e : edges()) {
    const Point2 d = vertices[static_cast<size_t>(e[1])] - vertices[static_cast<size_t>(e[0])];
    h = std::max(h, std::hypot(d.x, d.y));
  }
  return h;
}

std::vector<int> Triangulation::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices(); ++v) {
    if (!is_boundary[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

Triangulation base_mesh(const std::vector<Point2>& polygon) {
  const int n = static_cast<int>(polygon.size());
  if (n < 3) throw std::invalid_argument("base_mesh: need at least 3 vertices");
  const double area = polygon_area(polygon);
  if (std::abs(area) < 1e-14) throw std::invalid_argument("base_mesh: degenerate polygon (zero area)");
  if (area < 0) throw std::invalid_argument("base_mesh: polygon must be counterclockwise");

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;  // adjacent edges share a point
      if (segments_intersect(polygon[static_cast<size_t>(i)], polygon[static_cast<size_t>((i + 1) % n)],
                             polygon[static_cast<size_t>(j)], polygon[static_cast<size_t>((j + 1) % n)]))
        throw std::invalid_argument("base_mesh: self-intersecting polygon");
    }
  }

  Triangulation tri;
  tri.vertices = polygon;
  tri.is_boundary.assign(static_cast<size_t>(n), 1);
  tri.domain_area = area;

  // Ear clipping on the index ring.
  std::vector<int> ring(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ring[static_cast<size_t>(i)] = i;
  while (ring.size() > 3) {
    bool clipped = false;
    for (size_t k = 0; k < ring.size(); ++k) {
      const int ia = ring[(k + ring.size() - 1) % ring.size()];
      const int ib = ring[k];
      const int ic = ring[(k + 1) % ring.size()];
      const Point2 a = polygon[static_cast<size_t>(ia)];
      const Point2 b = polygon[static_cast<size_t>(ib)];
      const Point2 c = polygon[static_cast<size_t>(ic)];
      if (cross(a, b, c) <= 1e-14) continue;  // reflex or flat corner
      bool blocked = false;
      for (int other : ring) {
        if (other == ia || other == ib || other == ic) continue;
        if (point_blocks_ear(polygon[static_cast<size_t>(other)], a, b, c)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tri.triangles.push_back({ia, ib, ic});
      ring.erase(ring.begin() + static_cast<long>(k));
      clipped = true;
      break;
    }
    if (!clipped) throw std::invalid_argument("base_mesh: ear clipping failed (non-simple polygon?)");
  }
  tri.triangles.push_back({ring[0], ring[1], ring[2]});
  validate_triangulation(tri);
  return tri;
}

Triangulation unit_square_mesh() {
  Triangulation tri;
  tri.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  tri.triangles = {{0, 1, 2}, {0, 2, 3}};
  tri.is_boundary = {1, 1, 1, 1};
  tri.domain_area = 1.0;
  return tri;
}

Triangulation l_shape_mesh() {
  Triangulation tri;
  tri.vertices = {{0, 0},   {0.5, 0},   {1, 0},   {0, 0.5},
                  {0.5, 0.5}, {1, 0.5}, {0, 1},   {0.5, 1}};
  tri.triangles = {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {3, 4, 7}, {3, 7, 6}};
  tri.is_boundary = {1, 1, 1, 1, 1, 1, 1, 1};
  tri.domain_area = 0.75;
  return tri;
}

Triangulation refine(const Triangulation& tri) {
  const auto edge_list = tri.edges();
  std::map<std::array<int, 2>, int> midpoint_of;
  Triangulation fine;
  fine.vertices = tri.vertices;
  fine.is_boundary = tri.is_boundary;
  fine.level = tri.level + 1;
  fine.domain_area = tri.domain_area;
  fine.parent_vertex_count = tri.n_vertices();

  // Count triangle adjacency per edge; midpoints of boundary edges (one
  // adjacent triangle) are boundary vertices.
  std::map<std::array<int, 2>, int> adjacency;
  for (const auto& t : tri.triangles) {
    ++adjacency[sorted_edge(t[0], t[1])];
    ++adjacency[sorted_edge(t[1], t[2])];
    ++adjacency[sorted_edge(t[2], t[0])];
  }

  for (const auto& e : edge_list) {
    const Point2 mid = 0.5 * (tri.vertices[static_cast<size_t>(e[0])] + tri.vertices[static_cast<size_t>(e[1])]);
    midpoint_of[e] = fine.n_vertices();
    fine.vertices.push_back(mid);
    fine.is_boundary.push_back(adjacency[e] == 1 ? 1 : 0);
    fine.midpoint_parents.push_back(e);
  }

  for (const auto& t : tri.triangles) {
    const int a = t[0], b = t[1], c = t[2];
    const int mab = midpoint_of[sorted_edge(a, b)];
    const int mbc = midpoint_of[sorted_edge(b, c)];
    const int mca = midpoint_of[sorted_edge(c, a)];
    fine.triangles.push_back({a, mab, mca});
    fine.triangles.push_back({mab, b, mbc});
    fine.triangles.push_back({mca, mbc, c});
    fine.triangles.push_back({mab, mbc, mca});
  }
  return fine;
}

void validate_triangulation(const Triangulation& tri) {
  if (tri.n_vertices() < 3 || tri.n_triangles() < 1)
    throw std::runtime_error("triangulation: too few vertices or triangles");
  if (static_cast<int>(tri.is_boundary.size()) != tri.n_vertices())
    throw std::runtime_error("triangulation: boundary flag size mismatch");

  double total_area = 0;
  for (int t = 0; t < tri.n_triangles(); ++t) {
    const double area = tri.triangle_area(t);
    if (area <= 0) throw std::runtime_error("triangulation: non-positive triangle area");
    total_area += area;
    for (int v : tri.triangles[static_cast<size_t>(t)]) {
      if (v < 0 || v >= tri.n_vertices()) throw std::runtime_error("triangulation: vertex index out of range");
    }
  }
  if (tri.domain_area > 0 && std::abs(total_area - tri.domain_area) > 1e-12 * tri.domain_area)
    throw std::runtime_error("triangulation: triangle areas do not cover the domain");

  // Conformity surrogate for intersection-along-borders: every directed
  // edge appears at most once, every undirected edge in at most two
  // triangles.
  std::map<std::array<int, 2>, int> directed;
  std::map<std::array<int, 2>, int> undirected;
  for (const auto& t : tri.triangles) {
    const std::array<std::array<int, 2>, 3> es = {{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}};
    for (const auto& e : es) {
      if (++directed[e] > 1) throw std::runtime_error("triangulation: duplicated directed edge");
      if (++undirected[sorted_edge(e[0], e[1])] > 2)
        throw std::runtime_error("triangulation: edge shared by more than two triangles");
    }
  }
  for (const auto& [e, count] : undirected) {
    if (count == 1) {
      if (!tri.is_boundary[static_cast<size_t>(e[0])] || !tri.is_boundary[static_cast<size_t>(e[1])])
        throw std::runtime_error("triangulation: boundary edge endpoint not flagged boundary");
    }
  }
}

std::vector<double> prolong_nodal(const Triangulation& fine, std::span<const double> coarse_nodal) {
  if (fine.parent_vertex_count == 0)
    throw std::invalid_argument("prolong_nodal: mesh has no refinement bookkeeping");
  if (static_cast<int>(coarse_nodal.size()) != fine.parent_vertex_count)
    throw std::invalid_argument("prolong_nodal: coarse vector size mismatch");
  std::vector<double> nodal(static_cast<size_t>(fine.n_vertices()), 0.0);
  for (int v = 0; v < fine.parent_vertex_count; ++v) nodal[static_cast<size_t>(v)] = coarse_nodal[static_cast<size_t>(v)];
  for (size_t e = 0; e < fine.midpoint_parents.size(); ++e) {
    const auto& parents = fine.midpoint_parents[e];
    nodal[static_cast<size_t>(fine.parent_vertex_count) + e] =
        0.5 * (coarse_nodal[static_cast<size_t>(parents[0])] + coarse_nodal[static_cast<size_t>(parents[1])]);
  }
  return nodal;
}

void write_mesh(const Triangulation& tri, std::ostream& out) {
  out << "vertices " << tri.n_vertices() << '\n';
  for (int v = 0; v < tri.n_vertices(); ++v) {
    const Point2& p = tri.vertices[static_cast<size_t>(v)];
    out << format_double(p.x) << ' ' << format_double(p.y) << ' '
        << static_cast<int>(tri.is_boundary[static_cast<size_t>(v)]) << '\n';
  }
  out << "triangles " << tri.n_triangles() << '\n';
  for (const auto& t : tri.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

Triangulation read_mesh(std::istream& in) {
  std::string keyword;
  int n = 0;
  if (!(in >> keyword >> n) || keyword != "vertices")
    throw std::runtime_error("read_mesh: expected 'vertices N'");
  Triangulation tri;
  tri.vertices.resize(static_cast<size_t>(n));
  tri.is_boundary.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int flag = 0;
    if (!(in >> tri.vertices[static_cast<size_t>(v)].x >> tri.vertices[static_cast<size_t>(v)].y >> flag))
      throw std::runtime_error("read_mesh: bad vertex line");
    tri.is_boundary[static_cast<size_t>(v)] = static_cast<std::uint8_t>(flag != 0);
  }
  int m = 0;
  if (!(in >> keyword >> m) || keyword != "triangles")
    throw std::runtime_error("read_mesh: expected 'triangles M'");
  tri.triangles.resize(static_cast<size_t>(m));
  for (int t = 0; t < m; ++t) {
    auto& e = tri.triangles[static_cast<size_t>(t)];
    if (!(in >> e[0] >> e[1] >> e[2])) throw std::runtime_error("read_mesh: bad triangle line");
  }
  double area = 0;
  for (int t = 0; t < m; ++t) area += tri.triangle_area(t);
  tri.domain_area = area;
  return tri;
}

}  // namespace schemelab
