#pragma once

// Constrained cone graphs.  Per vertex and per subcone, an edge goes to the
// visible vertex whose projection onto the bisector of the enclosing cone is
// closest to the apex.  Projections are always measured on the original
// cone's bisector, not per subcone.  The half graph keeps only the three
// positive cones (regions 0, 2, 4); by duality every edge still shows up at
// the other endpoint inside a negative region.
//
// A constraint endpoint lies on its own splitting ray and therefore competes
// in both adjacent subcones; the same winner found twice collapses to one
// undirected edge.

#include "visroute/cones.hpp"
#include "visroute/geom_graph.hpp"
#include "visroute/visibility.hpp"

#include <optional>
#include <vector>

namespace visroute {

namespace detail {

// Per-apex subcone minimization over the visible neighbors, exact m = 6.
template <class EmitEdge>
void hex_cone_edges(const Instance& inst, const GeomGraph& vis, std::size_t u, bool half_only,
                    EmitEdge&& emit) {
  std::vector<Vec2I> partners;
  partners.reserve(inst.constraint_partners(u).size());
  for (std::int32_t c : inst.constraint_partners(u)) partners.push_back(inst.ipos(c));
  const ConeDecomposition6<Int> dec = decompose_cones6(inst.id_of(u), inst.ipos(u), partners);

  // winner[region][sub] -> neighbor index
  std::array<std::vector<std::optional<std::int32_t>>, 6> winner;
  for (int r = 0; r < 6; ++r) winner[r].assign(dec.subcone_count(r), std::nullopt);

  for (std::int32_t v : vis.adj[u]) {
    const Vec2I d = inst.ipos(v) - inst.ipos(u);
    const int region = cone_of6(d);
    if (half_only && !positive_region(region)) continue;
    int subs[2];
    int nsubs = 0;
    subcones_of6(dec, d, region, subs, &nsubs);
    for (int k = 0; k < nsubs; ++k) {
      auto& best = winner[region][subs[k]];
      if (!best) {
        best = v;
        continue;
      }
      const int cmp = sign_of(bisector_projection6(region, inst.ipos(v) - inst.ipos(*best)));
      if (cmp == 0)
        throw std::domain_error("projection tie while building a cone graph (degenerate input)");
      if (cmp < 0) best = v;
    }
  }
  for (int r = 0; r < 6; ++r)
    for (const auto& best : winner[r])
      if (best) emit(u, std::size_t(*best));
}

}  // namespace detail

inline GeomGraph build_constrained_half_theta6(const Instance& inst, const GeomGraph& vis) {
  GeomGraph g(GraphKind::half_theta6, inst.size());
  for (std::size_t u = 0; u < inst.size(); ++u)
    detail::hex_cone_edges(inst, vis, u, true,
                           [&](std::size_t a, std::size_t b) { g.add_edge(a, b); });
  g.finish();
  return g;
}

inline GeomGraph build_constrained_half_theta6(const Instance& inst) {
  return build_constrained_half_theta6(inst, build_visibility_graph(inst));
}

// Full constrained theta graph.  m = 6 runs on the exact hexagonal kernel;
// other cone counts go through the best-effort high-precision path and throw
// when a comparison is too close to certify.
inline GeomGraph build_constrained_theta(const Instance& inst, int m, const GeomGraph& vis) {
  GeomGraph g(GraphKind::theta, inst.size());
  if (m == 6) {
    for (std::size_t u = 0; u < inst.size(); ++u)
      detail::hex_cone_edges(inst, vis, u, false,
                             [&](std::size_t a, std::size_t b) { g.add_edge(a, b); });
    g.finish();
    return g;
  }
  if (m < 3) throw std::invalid_argument("cone count must be at least 3");

  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  auto angle_of = [&](const Vec2R& d) {
    BigFloat phi = atan2(d.x.convert_to<BigFloat>(), d.y.convert_to<BigFloat>());
    if (phi < 0) phi += 2 * pi;
    return phi;  // clockwise from north in [0, 2*pi)
  };

  for (std::size_t u = 0; u < inst.size(); ++u) {
    // Splitting rays per cone, as clockwise angles.
    std::vector<std::vector<BigFloat>> splits(m);
    for (std::int32_t c : inst.constraint_partners(u)) {
      const Vec2R d = inst.pos(c) - inst.pos(u);
      splits[cone_of_m(d, m)].push_back(angle_of(d));
    }
    for (auto& list : splits) std::sort(list.begin(), list.end());

    std::vector<std::vector<std::optional<std::int32_t>>> winner(m);
    std::vector<std::vector<BigFloat>> winner_proj(m);
    for (int r = 0; r < m; ++r) {
      winner[r].assign(splits[r].size() + 1, std::nullopt);
      winner_proj[r].assign(splits[r].size() + 1, BigFloat(0));
    }
    const BigFloat margin("1e-40");
    for (std::int32_t v : vis.adj[u]) {
      const Vec2R d = inst.pos(v) - inst.pos(u);
      const int region = cone_of_m(d, m);
      const BigFloat phi = angle_of(d);
      const BigFloat bang = BigFloat(2) * pi * region / m;
      const BigFloat proj = sin(bang) * d.x.convert_to<BigFloat>() +
                            cos(bang) * d.y.convert_to<BigFloat>();
      // Figure out the subcone(s); near-ray directions land in both.
      const auto& list = splits[region];
      std::size_t lo = 0;
      while (lo < list.size() && list[lo] < phi - margin) ++lo;
      std::size_t hi = lo;
      while (hi < list.size() && list[hi] <= phi + margin) ++hi;
      for (std::size_t sub = lo; sub <= hi; ++sub) {
        auto& best = winner[region][sub];
        if (!best || proj < winner_proj[region][sub] - margin) {
          if (best && abs(proj - winner_proj[region][sub]) <= margin)
            throw std::domain_error("projection comparison too close to certify for m != 6");
          best = v;
          winner_proj[region][sub] = proj;
        }
      }
    }
    for (int r = 0; r < m; ++r)
      for (const auto& best : winner[r])
        if (best) g.add_edge(u, std::size_t(*best));
  }
  g.finish();
  return g;
}

inline GeomGraph build_constrained_theta(const Instance& inst, int m) {
  return build_constrained_theta(inst, m, build_visibility_graph(inst));
}

}  // namespace visroute
