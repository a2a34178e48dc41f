#include "visroute/crossed_subgraph.hpp"

#include "visroute/random_gen.hpp"
#include "visroute/shortest_path.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace visroute;

namespace {

struct Fixture {
  Instance inst;
  Triangulation tri;
  Fixture(int n, double density, std::uint64_t seed)
      : inst([&] {
          GenParams gp;
          gp.n = n;
          gp.density = density;
          gp.seed = seed;
          return generate_random_instance(gp);
        }()),
        tri(build_cdt(inst)) {}
};

}  // namespace

TEST_CASE("collected triangles all meet the segment, in entry order") {
  const Fixture fx(16, 0.4, 5);
  const std::int32_t s = 0, t = std::int32_t(fx.inst.size()) - 1;
  const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, s, t);
  REQUIRE_FALSE(cs.crossed_faces.empty());

  Rational prev_entry(-1);
  for (const auto& f : cs.crossed_faces) {
    CHECK(triangle_intersects_segment(fx.inst.ipos(f[0]), fx.inst.ipos(f[1]),
                                      fx.inst.ipos(f[2]), fx.inst.ipos(s), fx.inst.ipos(t)));
    const auto [lo, hi] = detail::clip_to_triangle(fx.inst.ipos(s), fx.inst.ipos(t),
                                                   fx.inst.ipos(f[0]), fx.inst.ipos(f[1]),
                                                   fx.inst.ipos(f[2]));
    REQUIRE(lo <= hi);
    CHECK(prev_entry <= lo);
    prev_entry = lo;
  }

  // ... and no qualifying triangle was skipped.
  std::set<std::array<std::int32_t, 3>> collected(cs.crossed_faces.begin(),
                                                  cs.crossed_faces.end());
  for (const auto& face : enumerate_faces(fx.tri)) {
    if (face.size() != 3 || sign_of(face_signed_area2(fx.inst, face)) <= 0) continue;
    if (triangle_intersects_segment(fx.inst.ipos(face[0]), fx.inst.ipos(face[1]),
                                    fx.inst.ipos(face[2]), fx.inst.ipos(s), fx.inst.ipos(t)))
      CHECK(collected.count({face[0], face[1], face[2]}) == 1);
  }
}

TEST_CASE("edge set is exactly the union of the triangle boundaries") {
  const Fixture fx(14, 0.5, 7);
  const std::int32_t s = 1, t = std::int32_t(fx.inst.size()) - 2;
  const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, s, t);

  std::set<std::pair<std::int32_t, std::int32_t>> expect;
  std::set<std::int32_t> verts;
  for (const auto& f : cs.crossed_faces)
    for (int i = 0; i < 3; ++i) {
      const auto a = f[i], b = f[(i + 1) % 3];
      expect.emplace(std::min(a, b), std::max(a, b));
      verts.insert(a);
    }
  const auto got = cs.h.edges();
  CHECK(std::set<std::pair<std::int32_t, std::int32_t>>(got.begin(), got.end()) == expect);
  CHECK(cs.vertices == std::vector<std::int32_t>(verts.begin(), verts.end()));
  for (auto [a, b] : got) CHECK(fx.tri.has_edge(a, b));
}

TEST_CASE("both endpoints always land in the subgraph, connected") {
  for (std::uint64_t seed : {2, 3, 4}) {
    const Fixture fx(12, 0.3, seed);
    for (std::int32_t s : {0, 2}) {
      for (std::int32_t t = 0; t < std::int32_t(fx.inst.size()); ++t) {
        if (s == t) continue;
        const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, s, t);
        CHECK(std::binary_search(cs.vertices.begin(), cs.vertices.end(), s));
        CHECK(std::binary_search(cs.vertices.begin(), cs.vertices.end(), t));
        const DijkstraResult res = dijkstra(fx.inst, cs.h, s);
        CHECK(res.reached(std::size_t(t)));
      }
    }
  }
}

TEST_CASE("densified graph extends the plane one") {
  const Fixture fx(18, 0.5, 9);
  const std::int32_t s = 0, t = std::int32_t(fx.inst.size()) - 1;
  const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, s, t);
  const DenseCrossedSubgraph dense = build_dense_crossed_subgraph(fx.inst, cs);

  for (auto [a, b] : cs.h.edges()) CHECK(dense.g.has_edge(a, b));
  std::vector<char> allowed(fx.inst.size(), 0);
  for (std::int32_t v : cs.vertices) allowed[v] = 1;
  for (auto [a, b] : dense.g.edges()) {
    CHECK(allowed[a] == 1);
    CHECK(allowed[b] == 1);
  }
  for (auto [a, b] : dense.hull_edges) CHECK(dense.g.has_edge(a, b));
  for (auto [a, b] : dense.chord_edges) CHECK(dense.g.has_edge(a, b));

  // Densifying never hurts: distances can only shrink.
  const CertifiedDistance before = certified_distance(fx.inst, cs.h, s, t);
  const CertifiedDistance after = certified_distance(fx.inst, dense.g, s, t);
  REQUIRE(before.reachable);
  REQUIRE(after.reachable);
  CHECK(after.value.lo <= before.value.hi);
}

TEST_CASE("chords respect walls with both ends inside") {
  for (std::uint64_t seed : {11, 13}) {
    const Fixture fx(16, 0.8, seed);
    REQUIRE_FALSE(fx.inst.constraints().empty());
    const std::int32_t s = 0, t = std::int32_t(fx.inst.size()) - 1;
    const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, s, t);
    const DenseCrossedSubgraph dense = build_dense_crossed_subgraph(fx.inst, cs);

    std::vector<char> inside(fx.inst.size(), 0);
    for (std::int32_t v : cs.vertices) inside[v] = 1;
    for (auto [a, b] : dense.chord_edges)
      for (auto [c, d] : fx.inst.constraints()) {
        if (!inside[c] || !inside[d]) continue;
        if (c == a || c == b || d == a || d == b) continue;
        CHECK_FALSE(properly_intersects(fx.inst.ipos(a), fx.inst.ipos(b), fx.inst.ipos(c),
                                        fx.inst.ipos(d)));
      }
  }
}

TEST_CASE("degenerate query: adjacent endpoints still produce a subgraph") {
  const Fixture fx(10, 0.0, 1);
  // pick an existing triangulation edge
  const auto e = fx.tri.edges().front();
  const CrossedSubgraph cs = extract_crossed_subgraph(fx.inst, fx.tri, e.first, e.second);
  CHECK(cs.h.has_edge(e.first, e.second));
  REQUIRE_FALSE(cs.crossed_faces.empty());
}
