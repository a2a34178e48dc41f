#include "visroute/local_ident.hpp"

#include "visroute/random_gen.hpp"
#include "visroute/theta_graphs.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace visroute;

namespace {

Point pt(std::int64_t id, const char* x, const char* y) {
  return Point{id, parse_rational(x), parse_rational(y)};
}

// Ids of the edges the packet owner identifies, sorted.
std::vector<std::int64_t> local_ids(const Instance& inst, const GeomGraph& vis, std::size_t u) {
  std::vector<std::int64_t> out;
  for (const auto& [self, other] : local_half_theta6_edges(make_neighborhood(inst, vis, u)))
    out.push_back(other);
  std::sort(out.begin(), out.end());
  return out;
}

// Ids of u's incident edges in the globally built half graph, sorted.
std::vector<std::int64_t> global_ids(const Instance& inst, const GeomGraph& half, std::size_t u) {
  std::vector<std::int64_t> out;
  for (std::int32_t v : half.adj[u]) out.push_back(inst.id_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("owner drops the edge when a nearer candidate claims the neighbor") {
  // 2 sits in the cone of 1 that contains 0, closer along the bisector, so
  // 0 cannot have won the selection made at 1.
  std::vector<Point> pts = {pt(0, "0", "0"), pt(1, "0", "-2"), pt(2, "1/5", "-1/10")};
  const Instance inst(pts, {}, Validation::full);
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  const auto got = local_ids(inst, vis, inst.index_of(0));
  CHECK(got == std::vector<std::int64_t>{2});
  CHECK(got == global_ids(inst, half, inst.index_of(0)));
  CHECK_FALSE(half.has_edge(std::int32_t(inst.index_of(0)), std::int32_t(inst.index_of(1))));
}

TEST_CASE("owner keeps the edge once the nearer candidate is gone") {
  std::vector<Point> pts = {pt(0, "0", "0"), pt(1, "0", "-2")};
  const Instance inst(pts, {}, Validation::full);
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  const auto got = local_ids(inst, vis, inst.index_of(0));
  CHECK(got == std::vector<std::int64_t>{1});
  CHECK(half.has_edge(std::int32_t(inst.index_of(0)), std::int32_t(inst.index_of(1))));
}

TEST_CASE("owner discounts candidates its own walls hide from the neighbor") {
  // Same shape, but the wall (0,3) cuts the segment from 2 down to 1; the
  // owner must realize 2 was never visible to 1 and keep the edge.
  std::vector<Point> pts = {pt(0, "0", "0"), pt(1, "0", "-2"), pt(2, "1/5", "-1/10"),
                            pt(3, "1/2", "-3/2")};
  const Instance inst(pts, {{0, 3}}, Validation::full);
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  REQUIRE_FALSE(vis.has_edge(std::int32_t(inst.index_of(1)), std::int32_t(inst.index_of(2))));
  const auto got = local_ids(inst, vis, inst.index_of(0));
  CHECK(std::binary_search(got.begin(), got.end(), std::int64_t(1)));
  CHECK(half.has_edge(std::int32_t(inst.index_of(0)), std::int32_t(inst.index_of(1))));
}

TEST_CASE("wall endpoints win on either closed side of their ray") {
  // Wall (0,3) splits the north cone of 0.  Vertex 3, sitting on its own
  // splitting ray at 0, keeps its edge by winning the clockwise side even
  // though 2 beats it on the counterclockwise one.
  std::vector<Point> pts = {
      pt(0, "0", "0"),   pt(1, "-1/3", "5/4"), pt(2, "-1/8", "9/10"),
      pt(3, "1/4", "1"), pt(4, "1/2", "7/8"),  pt(5, "1/2", "1/2"),
      pt(6, "7/20", "21/20"),
  };
  const Instance inst(pts, {{0, 3}, {5, 6}}, Validation::full);
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  // The packet at 3 must agree with the global graph about the wall edge.
  const auto at3 = local_ids(inst, vis, inst.index_of(3));
  CHECK(std::binary_search(at3.begin(), at3.end(), std::int64_t(0)));
  CHECK(half.has_edge(std::int32_t(inst.index_of(3)), std::int32_t(inst.index_of(0))));
}

TEST_CASE("every vertex identifies exactly its global edge set") {
  for (int n : {10, 18, 26}) {
    for (double density : {0.0, 0.5}) {
      for (std::uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        GenParams gp;
        gp.n = n;
        gp.density = density;
        gp.seed = seed;
        const Instance inst = generate_random_instance(gp);
        const GeomGraph vis = build_visibility_graph(inst);
        const GeomGraph half = build_constrained_half_theta6(inst, vis);
        for (std::size_t u = 0; u < inst.size(); ++u) {
          INFO("n=" << n << " density=" << density << " seed=" << seed << " u="
                    << inst.id_of(u));
          CHECK(local_ids(inst, vis, u) == global_ids(inst, half, u));
        }
      }
    }
  }
}

TEST_CASE("identification needs only the packet, not the instance") {
  // Rebuild the packet from scratch (fresh ids, reordered neighbors) and
  // check the decision is unchanged: nothing may leak past the packet.
  GenParams gp;
  gp.n = 14;
  gp.density = 0.5;
  gp.seed = 4;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph vis = build_visibility_graph(inst);
  for (std::size_t u = 0; u < inst.size(); ++u) {
    Neighborhood nb = make_neighborhood(inst, vis, u);
    std::reverse(nb.nbrs.begin(), nb.nbrs.end());
    nb.build_shadow();
    std::set<std::int64_t> reordered;
    for (const auto& [self, other] : local_half_theta6_edges(nb)) reordered.insert(other);
    std::set<std::int64_t> original;
    for (const auto& [self, other] : local_half_theta6_edges(make_neighborhood(inst, vis, u)))
      original.insert(other);
    CHECK(reordered == original);
  }
}
