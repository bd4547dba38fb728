#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "schemelab/mesh.hpp"

using namespace schemelab;

TEST_CASE("unit square fixture") {
  const Triangulation tri = unit_square_mesh();
  CHECK(tri.n_vertices() == 4);
  CHECK(tri.n_triangles() == 2);
  CHECK(tri.n_edges() == 5);
  for (auto flag : tri.is_boundary) CHECK(flag == 1);
  CHECK_NOTHROW(validate_triangulation(tri));
}

TEST_CASE("l-shape fixture") {
  const Triangulation tri = l_shape_mesh();
  CHECK(tri.n_vertices() == 8);
  CHECK(tri.n_triangles() == 6);
  CHECK(tri.domain_area == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_NOTHROW(validate_triangulation(tri));
}

TEST_CASE("base mesh rejects degenerate input") {
  CHECK_THROWS_AS(base_mesh({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);  // zero area
  CHECK_THROWS_AS(base_mesh({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::invalid_argument);  // clockwise
  // Self-intersecting bowtie.
  CHECK_THROWS_AS(base_mesh({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(base_mesh({{0, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("base mesh triangulates simple polygons by ear clipping") {
  const Triangulation square = base_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(square.n_triangles() == 2);

  // Non-convex hexagon (L outline): n - 2 triangles on the corner ring.
  const Triangulation ell =
      base_mesh({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}});
  CHECK(ell.n_triangles() == 4);
  CHECK(ell.domain_area == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_NOTHROW(validate_triangulation(ell));
}

TEST_CASE("refinement combinatorics over five levels") {
  for (Triangulation tri : {unit_square_mesh(), l_shape_mesh()}) {
    for (int l = 0; l < 5; ++l) {
      const int v = tri.n_vertices();
      const int e = tri.n_edges();
      const int t = tri.n_triangles();
      const Triangulation fine = refine(tri);
      CHECK(fine.n_vertices() == v + e);
      CHECK(fine.n_triangles() == 4 * t);
      CHECK(fine.level == tri.level + 1);
      CHECK_NOTHROW(validate_triangulation(fine));
      tri = fine;
    }
  }
}

TEST_CASE("unit square refinement matches the hand counts") {
  const Triangulation l1 = refine(unit_square_mesh());
  CHECK(l1.n_vertices() == 9);
  CHECK(l1.n_triangles() == 8);
  const Triangulation l2 = refine(l1);
  CHECK(l2.n_vertices() == 25);
  CHECK(l2.n_triangles() == 32);

  // The center vertex (diagonal midpoint) is interior and stays interior.
  const auto interior = l1.interior_vertices();
  REQUIRE(interior.size() == 1);
  const Point2 c = l1.vertices[static_cast<size_t>(interior[0])];
  CHECK(c.x == 0.5);
  CHECK(c.y == 0.5);
  CHECK(!l2.is_boundary[static_cast<size_t>(interior[0])]);
}

TEST_CASE("boundary midpoints are boundary, interior midpoints are not") {
  const Triangulation l1 = refine(unit_square_mesh());
  int boundary_count = 0;
  for (auto flag : l1.is_boundary) boundary_count += flag;
  CHECK(boundary_count == 8);  // 4 corners + 4 edge midpoints; center interior
}

TEST_CASE("prolongation is the nodal P1 embedding") {
  const Triangulation l0 = unit_square_mesh();
  const Triangulation l1 = refine(l0);
  // An affine function is reproduced exactly at all fine nodes.
  std::vector<double> coarse(4);
  for (int v = 0; v < 4; ++v) {
    const Point2 p = l0.vertices[static_cast<size_t>(v)];
    coarse[static_cast<size_t>(v)] = 2.0 * p.x - 3.0 * p.y + 0.25;
  }
  const std::vector<double> fine = prolong_nodal(l1, coarse);
  for (int v = 0; v < l1.n_vertices(); ++v) {
    const Point2 p = l1.vertices[static_cast<size_t>(v)];
    CHECK(fine[static_cast<size_t>(v)] == doctest::Approx(2.0 * p.x - 3.0 * p.y + 0.25).epsilon(1e-15));
  }
  // Old vertices keep their values bit-for-bit.
  for (int v = 0; v < 4; ++v) CHECK(fine[static_cast<size_t>(v)] == coarse[static_cast<size_t>(v)]);
}

TEST_CASE("mesh text format round-trips") {
  const Triangulation l1 = refine(l_shape_mesh());
  std::stringstream stream;
  write_mesh(l1, stream);
  const Triangulation back = read_mesh(stream);
  CHECK(back.n_vertices() == l1.n_vertices());
  CHECK(back.n_triangles() == l1.n_triangles());
  CHECK(back.domain_area == doctest::Approx(l1.domain_area).epsilon(1e-14));
  for (int v = 0; v < l1.n_vertices(); ++v) {
    CHECK(back.vertices[static_cast<size_t>(v)].x == l1.vertices[static_cast<size_t>(v)].x);
    CHECK(back.vertices[static_cast<size_t>(v)].y == l1.vertices[static_cast<size_t>(v)].y);
    CHECK(back.is_boundary[static_cast<size_t>(v)] == l1.is_boundary[static_cast<size_t>(v)]);
  }
  CHECK(back.triangles == l1.triangles);

  std::stringstream bad("vertices x");
  CHECK_THROWS_AS(read_mesh(bad), std::runtime_error);
}

TEST_CASE("validation catches broken meshes") {
  Triangulation tri = unit_square_mesh();
  tri.triangles[0] = {0, 2, 1};  // flipped orientation
  CHECK_THROWS_AS(validate_triangulation(tri), std::runtime_error);

  tri = unit_square_mesh();
  tri.is_boundary[0] = 0;  // corner not flagged
  CHECK_THROWS_AS(validate_triangulation(tri), std::runtime_error);

  tri = unit_square_mesh();
  tri.domain_area = 2.0;  // covering violated
  CHECK_THROWS_AS(validate_triangulation(tri), std::runtime_error);
}
