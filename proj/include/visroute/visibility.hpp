#pragma once

// Constrained visibility.  Two vertices see each other when their segment
// properly crosses no constraint; touching a constraint endpoint does not
// block, and constraints themselves are always visibility edges (they cannot
// be crossed by other constraints).  Construction is the straightforward
// O(n^2 |S|) scan over the integer shadow — instances live at desk scale.

#include "visroute/geom_graph.hpp"
#include "visroute/instance.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace visroute {

inline bool visible(const Instance& inst, std::size_t a, std::size_t b) {
  if (a == b) return false;
  const Vec2I& pa = inst.ipos(a);
  const Vec2I& pb = inst.ipos(b);
  for (auto [c, d] : inst.constraints()) {
    if (std::size_t(c) == a || std::size_t(c) == b || std::size_t(d) == a || std::size_t(d) == b)
      continue;
    if (properly_intersects(pa, pb, inst.ipos(c), inst.ipos(d))) return false;
  }
  return true;
}

inline GeomGraph build_visibility_graph(const Instance& inst) {
  GeomGraph g(GraphKind::visibility, inst.size());
  for (std::size_t a = 0; a < inst.size(); ++a)
    for (std::size_t b = a + 1; b < inst.size(); ++b)
      if (visible(inst, a, b)) g.add_edge(a, b);
  g.finish();
  return g;
}

// The 1-local knowledge packet of a vertex: its own id and position, its
// graph neighbors with positions, and which of those neighbors it shares a
// constraint with.  Routing steps receive exactly this (plus source and
// destination) and nothing else.  The packet carries its own denominator-
// cleared integer copy of the coordinates so local decisions run on integer
// arithmetic without touching the instance.
struct NbhdEntry {
  std::int64_t id = 0;
  Vec2R p;
  bool constraint = false;
};

struct Neighborhood {
  std::int64_t self_id = 0;
  Vec2R self;
  std::vector<NbhdEntry> nbrs;

  // integer shadow (derived from the fields above on construction)
  Vec2I iself;
  std::vector<Vec2I> inbrs;

  void build_shadow() {
    Int lcm_den = 1;
    auto fold = [&](const Vec2R& v) {
      lcm_den = lcm(lcm_den, denominator(v.x));
      lcm_den = lcm(lcm_den, denominator(v.y));
    };
    fold(self);
    for (const auto& e : nbrs) fold(e.p);
    auto scale = [&](const Vec2R& v) {
      return Vec2I(numerator(v.x) * (lcm_den / denominator(v.x)),
                   numerator(v.y) * (lcm_den / denominator(v.y)));
    };
    iself = scale(self);
    inbrs.clear();
    inbrs.reserve(nbrs.size());
    for (const auto& e : nbrs) inbrs.push_back(scale(e.p));
  }
};

// Validates packet self-consistency; local algorithms reject malformed
// neighborhoods instead of computing garbage from them.
inline void validate_neighborhood(const Neighborhood& nb) {
  if (nb.inbrs.size() != nb.nbrs.size())
    throw std::invalid_argument("neighborhood shadow out of sync");
  for (std::size_t i = 0; i < nb.nbrs.size(); ++i) {
    if (nb.nbrs[i].id == nb.self_id)
      throw std::invalid_argument("neighborhood lists its own vertex as a neighbor");
    if (nb.nbrs[i].p == nb.self)
      throw std::invalid_argument("neighbor coincides with the packet owner");
    for (std::size_t j = i + 1; j < nb.nbrs.size(); ++j)
      if (nb.nbrs[i].id == nb.nbrs[j].id)
        throw std::invalid_argument("duplicate neighbor id in packet");
  }
}

inline Neighborhood make_neighborhood(const Instance& inst, const GeomGraph& g, std::size_t u) {
  Neighborhood nb;
  nb.self_id = inst.id_of(u);
  nb.self = inst.pos(u);
  nb.nbrs.reserve(g.adj[u].size());
  for (std::int32_t v : g.adj[u]) {
    NbhdEntry e;
    e.id = inst.id_of(v);
    e.p = inst.pos(v);
    e.constraint = inst.is_constraint(u, v);
    nb.nbrs.push_back(std::move(e));
  }
  nb.build_shadow();
  return nb;
}

}  // namespace visroute
