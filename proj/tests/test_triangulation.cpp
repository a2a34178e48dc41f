#include "visroute/triangulation.hpp"

#include "visroute/random_gen.hpp"
#include "visroute/visibility.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace visroute;

namespace {

Point pt(std::int64_t id, const char* x, const char* y) {
  return Point{id, parse_rational(x), parse_rational(y)};
}

}  // namespace

TEST_CASE("random triangulations pass the structural audit") {
  for (int n : {4, 9, 17, 25}) {
    for (double density : {0.0, 0.5}) {
      GenParams gp;
      gp.n = n;
      gp.density = density;
      gp.seed = std::uint64_t(n) * 7 + 1;
      const Instance inst = generate_random_instance(gp);
      const Triangulation t = build_cdt(inst);
      const TriangulationReport rep = validate_triangulation(inst, t);
      for (const auto& issue : rep.issues) INFO(issue);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("a second flip pass changes nothing") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    GenParams gp;
    gp.n = 20;
    gp.density = 0.4;
    gp.seed = seed;
    const Instance inst = generate_random_instance(gp);
    const Triangulation t = build_cdt(inst);
    Triangulation again = t;
    detail::lawson_flips(again, inst);
    CHECK(t.edges() == again.edges());
  }
}

TEST_CASE("forced edges beat the empty-circle rule") {
  // Thin convex quad: Delaunay wants the short diagonal (1,3); the forced
  // edge (0,2) kicks it out.
  std::vector<Point> pts = {pt(0, "0", "0"), pt(1, "5", "1/9"), pt(2, "10", "1/2"),
                            pt(3, "5", "3")};
  const Instance free_inst(pts, {}, Validation::full);
  const Triangulation free_t = build_cdt(free_inst);
  CHECK(free_t.has_edge(1, 3));
  CHECK_FALSE(free_t.has_edge(0, 2));

  const Instance walled(pts, {{0, 2}}, Validation::full);
  const Triangulation t = build_cdt(walled);
  CHECK(t.has_edge(std::int32_t(walled.index_of(0)), std::int32_t(walled.index_of(2))));
  CHECK_FALSE(t.has_edge(std::int32_t(walled.index_of(1)), std::int32_t(walled.index_of(3))));
  CHECK(validate_triangulation(walled, t).ok);
}

TEST_CASE("triangulation edges are visibility edges") {
  GenParams gp;
  gp.n = 18;
  gp.density = 0.6;
  gp.seed = 12;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph cdt = build_cdt_graph(inst);
  const GeomGraph vis = build_visibility_graph(inst);
  REQUIRE(cdt.edge_count() > 0);
  for (auto [a, b] : cdt.edges()) CHECK(vis.has_edge(a, b));
}

TEST_CASE("face walk finds one clockwise outer face and ccw triangles") {
  GenParams gp;
  gp.n = 13;
  gp.density = 0.3;
  gp.seed = 2;
  const Instance inst = generate_random_instance(gp);
  const Triangulation t = build_cdt(inst);
  const auto faces = enumerate_faces(t);
  std::size_t clockwise = 0;
  for (const auto& f : faces) {
    const int s = sign_of(face_signed_area2(inst, f));
    REQUIRE(s != 0);
    if (s < 0)
      ++clockwise;
    else
      CHECK(f.size() == 3);
  }
  CHECK(clockwise == 1);
  // Euler: v - e + f = 2 counting the outer face.
  CHECK(std::int64_t(inst.size()) - std::int64_t(t.edge_count()) + std::int64_t(faces.size()) ==
        2);
}

TEST_CASE("hull walk is counterclockwise and encloses everything") {
  GenParams gp;
  gp.n = 15;
  gp.density = 0.0;
  gp.seed = 6;
  const Instance inst = generate_random_instance(gp);
  const auto hull = convex_hull_indices(inst);
  REQUIRE(hull.size() >= 3);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto a = hull[i], b = hull[(i + 1) % hull.size()];
    for (std::size_t v = 0; v < inst.size(); ++v) {
      if (std::int32_t(v) == a || std::int32_t(v) == b) continue;
      CHECK(orientation(inst.ipos(a), inst.ipos(b), inst.ipos(v)) > 0);
    }
  }
}

TEST_CASE("tiny inputs triangulate without fuss") {
  const Instance two({pt(0, "0", "0"), pt(1, "3", "1/2")}, {}, Validation::full);
  const Triangulation t2 = build_cdt(two);
  CHECK(t2.edge_count() == 1);
  CHECK(validate_triangulation(two, t2).ok);

  const Instance three({pt(0, "0", "0"), pt(1, "3", "1/2"), pt(2, "1", "2")}, {},
                       Validation::full);
  const Triangulation t3 = build_cdt(three);
  CHECK(t3.edge_count() == 3);
  CHECK(validate_triangulation(three, t3).ok);
}
