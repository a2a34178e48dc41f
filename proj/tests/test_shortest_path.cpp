#include "visroute/shortest_path.hpp"

#include "visroute/random_gen.hpp"
#include "visroute/theta_graphs.hpp"
#include "visroute/visibility.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace visroute;

TEST_CASE("tree paths match the exhaustive search on small graphs") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7}) {
    GenParams gp;
    gp.n = 9;
    gp.density = seed % 2 ? 0.5 : 0.0;
    gp.seed = seed;
    const Instance inst = generate_random_instance(gp);
    const GeomGraph half = build_constrained_half_theta6(inst);
    for (std::int32_t s = 0; s < std::int32_t(inst.size()); ++s) {
      const DijkstraResult res = dijkstra(inst, half, s);
      for (std::int32_t t = 0; t < std::int32_t(inst.size()); ++t) {
        if (s == t) continue;
        INFO("seed=" << seed << " s=" << s << " t=" << t);
        const Path tree = extract_path(res, t);
        const Path brute = exhaustive_shortest_path(inst, half, s, t);
        REQUIRE_FALSE(tree.empty());
        REQUIRE_FALSE(brute.empty());
        CHECK(compare_path_lengths(inst, tree, brute) == 0);
      }
    }
  }
}

TEST_CASE("certified enclosures bracket the float distances") {
  GenParams gp;
  gp.n = 14;
  gp.density = 0.4;
  gp.seed = 3;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph vis = build_visibility_graph(inst);
  const DijkstraResult res = dijkstra(inst, vis, 0);
  for (std::int32_t t = 1; t < std::int32_t(inst.size()); ++t) {
    const CertifiedDistance cd = certified_distance(inst, vis, 0, t);
    REQUIRE(cd.reachable);
    REQUIRE_FALSE(cd.tree_path.empty());
    CHECK(cd.tree_path.verts.front() == 0);
    CHECK(cd.tree_path.verts.back() == t);
    CHECK(cd.value.lo <= cd.value.hi);
    // The double estimate of the same tree path must land inside a slightly
    // inflated enclosure.
    const double mid = to_double(cd.value.lo + (cd.value.hi - cd.value.lo) / 2);
    const double est = res.dist[t].convert_to<double>();
    CHECK(std::abs(mid - est) <= 1e-9 * (1.0 + est));
  }
}

TEST_CASE("unreachable targets are reported, not invented") {
  // Two separate segments; the graph is just those two edges.
  std::vector<Point> pts = {
      Point{0, parse_rational("0"), parse_rational("0")},
      Point{1, parse_rational("1"), parse_rational("1/3")},
      Point{2, parse_rational("9"), parse_rational("5")},
      Point{3, parse_rational("10"), parse_rational("11/2")},
  };
  const Instance inst(pts, {}, Validation::full);
  GeomGraph g(GraphKind::custom, inst.size());
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.finish();
  const DijkstraResult res = dijkstra(inst, g, 0);
  CHECK(res.reached(1));
  CHECK_FALSE(res.reached(2));
  CHECK_FALSE(res.reached(3));
  CHECK(extract_path(res, 2).empty());
  CHECK_FALSE(certified_distance(inst, g, 0, 3).reachable);
  CHECK(shortest_path(inst, g, 0, 1).hops() == 1);
}

TEST_CASE("path length comparison is symmetric and reflexive") {
  GenParams gp;
  gp.n = 10;
  gp.density = 0.2;
  gp.seed = 8;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph vis = build_visibility_graph(inst);
  const Path p = shortest_path(inst, vis, 0, std::int32_t(inst.size()) - 1);
  REQUIRE_FALSE(p.empty());
  Path rev = p;
  std::reverse(rev.verts.begin(), rev.verts.end());
  CHECK(compare_path_lengths(inst, p, rev) == 0);
  CHECK(compare_path_lengths(inst, p, p) == 0);

  Path longer = p;
  longer.verts.insert(longer.verts.begin(), p.verts[1]);  // tack on a detour hop
  CHECK(compare_path_lengths(inst, p, longer) == -1);
  CHECK(compare_path_lengths(inst, longer, p) == 1);
}

TEST_CASE("enclosure widths stay tiny") {
  GenParams gp;
  gp.n = 12;
  gp.density = 0.3;
  gp.seed = 9;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph vis = build_visibility_graph(inst);
  const CertifiedDistance cd = certified_distance(inst, vis, 0, std::int32_t(inst.size()) - 1);
  REQUIRE(cd.reachable);
  // 64-bit interval roots over a handful of edges: far below any tolerance
  // the library ever certifies against.
  CHECK(cd.value.width() < Rational(1, Int("1000000000000")));
}
