#pragma once

// Constrained Delaunay triangulation, exact throughout.
//
// Build pipeline: lexicographic incremental triangulation of the point set,
// Lawson flips to Delaunay, then one constraint at a time — remove the edges
// it crosses, insert the constraint, retriangulate the two cavity chains by
// recursive empty-circumcircle apex selection — and a final flip pass that
// leaves constraint edges alone.  Flip stability doubles as the acceptance
// oracle for the whole structure.
//
// The triangulation is stored as a rotation system: per vertex, incident
// neighbors sorted clockwise starting north.  Faces fall out of the walk
// "next dart = clockwise successor of the reversed arrival dart", which keeps
// every face's interior on its left; bounded faces come out counterclockwise
// and the outer face clockwise.

#include "visroute/geom_graph.hpp"
#include "visroute/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace visroute {

class Triangulation {
 public:
  explicit Triangulation(const Instance& inst) : inst_(&inst), ring_(inst.size()) {}

  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return ring_.size(); }
  const std::vector<std::int32_t>& ring(std::size_t u) const { return ring_[u]; }

  bool has_edge(std::int32_t u, std::int32_t v) const {
    const auto& r = ring_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
  }

  void add_edge(std::int32_t u, std::int32_t v) {
    if (u == v) throw std::invalid_argument("loop edge in triangulation");
    if (has_edge(u, v)) return;
    insert_sorted(u, v);
    insert_sorted(v, u);
  }

  void remove_edge(std::int32_t u, std::int32_t v) {
    erase_one(u, v);
    erase_one(v, u);
  }

  // Clockwise successor of w in the ring around u (wraps).
  std::int32_t cw_successor(std::int32_t u, std::int32_t w) const {
    const auto& r = ring_[u];
    const auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw std::logic_error("rotation query for a missing edge");
    const std::size_t k = std::size_t(it - r.begin());
    return r[(k + 1) % r.size()];
  }

  std::size_t edge_count() const {
    std::size_t d = 0;
    for (const auto& r : ring_) d += r.size();
    return d / 2;
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> edges() const {
    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    for (std::int32_t u = 0; u < std::int32_t(ring_.size()); ++u)
      for (std::int32_t v : ring_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  GeomGraph to_graph() const {
    GeomGraph g(GraphKind::cdt, ring_.size());
    for (const auto& [u, v] : edges()) g.add_edge(std::size_t(u), std::size_t(v));
    g.finish();
    return g;
  }

 private:
  // Strict clockwise-from-north order on directions out of u.  Valid because
  // no two neighbors of u are collinear with it.
  bool cw_less(std::int32_t u, std::int32_t a, std::int32_t b) const {
    const Vec2I da = inst_->ipos(a) - inst_->ipos(u);
    const Vec2I db = inst_->ipos(b) - inst_->ipos(u);
    const auto half = [](const Vec2I& d) {
      const int sx = sign_of(d.x);
      return (sx > 0 || (sx == 0 && sign_of(d.y) > 0)) ? 0 : 1;
    };
    const int ha = half(da), hb = half(db);
    if (ha != hb) return ha < hb;
    return sign_of(cross(da, db)) < 0;
  }

  void insert_sorted(std::int32_t u, std::int32_t v) {
    auto& r = ring_[u];
    auto it = r.begin();
    while (it != r.end() && cw_less(u, *it, v)) ++it;
    r.insert(it, v);
  }

  void erase_one(std::int32_t u, std::int32_t v) {
    auto& r = ring_[u];
    const auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) throw std::logic_error("removing a missing triangulation edge");
    r.erase(it);
  }

  const Instance* inst_;
  std::vector<std::vector<std::int32_t>> ring_;
};

// Every face as its boundary vertex cycle, interior on the left.  Bounded
// faces of a triangulation come out as counterclockwise triangles; the outer
// face is the clockwise hull cycle.
inline std::vector<std::vector<std::int32_t>> enumerate_faces(const Triangulation& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::int32_t>> faces;
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  const std::size_t guard = 4 * t.edge_count() + 8;
  for (std::int32_t u = 0; u < std::int32_t(n); ++u) {
    for (std::int32_t v : t.ring(u)) {
      if (seen.count({u, v})) continue;
      std::vector<std::int32_t> cyc;
      std::int32_t a = u, b = v;
      std::size_t steps = 0;
      do {
        seen.insert({a, b});
        cyc.push_back(a);
        const std::int32_t c = t.cw_successor(b, a);
        a = b;
        b = c;
        if (++steps > guard) throw std::logic_error("face walk failed to close");
      } while (!(a == u && b == v));
      faces.push_back(std::move(cyc));
    }
  }
  return faces;
}

// Twice the signed area of a face cycle on the integer shadow.
inline Int face_signed_area2(const Instance& inst, const std::vector<std::int32_t>& cyc) {
  Int s = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    s += cross(inst.ipos(cyc[i]), inst.ipos(cyc[(i + 1) % cyc.size()]));
  return s;
}

namespace detail {

// Apex of the triangle on the left of dart (u -> v): the common neighbor on
// that side whose triangle contains no other such neighbor.  Returns -1 when
// the left side is the outer face.
inline std::int32_t left_apex(const Triangulation& t, const Instance& inst, std::int32_t u,
                              std::int32_t v) {
  std::vector<std::int32_t> cands;
  for (std::int32_t w : t.ring(u))
    if (w != v && t.has_edge(v, w) &&
        orientation(inst.ipos(u), inst.ipos(v), inst.ipos(w)) > 0)
      cands.push_back(w);
  for (std::int32_t w : cands) {
    bool empty = true;
    for (std::int32_t w2 : cands)
      if (w2 != w &&
          in_triangle_closed(inst.ipos(w2), inst.ipos(u), inst.ipos(v), inst.ipos(w))) {
        empty = false;
        break;
      }
    if (empty) return w;
  }
  return -1;
}

// Restricted Lawson pass: flip non-constraint edges whose opposite apexes
// violate the empty-circle rule, until stable.
inline void lawson_flips(Triangulation& t, const Instance& inst) {
  const std::size_t n = inst.size();
  const std::size_t bound = 8 * n * n * n + 64;
  std::size_t flips = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : t.edges()) {
      if (inst.is_constraint(u, v)) continue;
      const std::int32_t w = left_apex(t, inst, u, v);
      const std::int32_t z = left_apex(t, inst, v, u);
      if (w < 0 || z < 0) continue;
      if (incircle(inst.ipos(u), inst.ipos(v), inst.ipos(w), inst.ipos(z)) <= 0) continue;
      // Flip only across a strictly convex quad.
      if (!properly_intersects(inst.ipos(w), inst.ipos(z), inst.ipos(u), inst.ipos(v)))
        continue;
      t.remove_edge(u, v);
      t.add_edge(w, z);
      changed = true;
      if (++flips > bound) throw std::logic_error("flip sequence failed to terminate");
    }
  }
}

// Retriangulate the polygon u -> v -> chain[0] -> ... -> chain.back() -> u
// (counterclockwise, chain strictly left of u->v) against base edge (u, v):
// pick the chain vertex whose circumcircle with the base is empty of the
// rest, emit its triangle, recurse on both flanks.
inline void retriangulate_fan(Triangulation& t, const Instance& inst, std::int32_t u,
                              std::int32_t v, const std::vector<std::int32_t>& chain,
                              std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  std::size_t pick = hi;
  for (std::size_t i = lo; i < hi && pick == hi; ++i) {
    bool empty = true;
    for (std::size_t j = lo; j < hi; ++j) {
      if (j == i) continue;
      const int s = incircle(inst.ipos(u), inst.ipos(v), inst.ipos(chain[i]),
                             inst.ipos(chain[j]));
      // Base u->v has the chain on its left, so (u, v, chain[i]) is ccw.
      if (s > 0) {
        empty = false;
        break;
      }
    }
    if (empty) pick = i;
  }
  if (pick == hi) throw std::logic_error("no admissible apex while filling a cavity");
  t.add_edge(u, chain[pick]);
  t.add_edge(v, chain[pick]);
  retriangulate_fan(t, inst, chain[pick], v, chain, lo, pick);
  retriangulate_fan(t, inst, u, chain[pick], chain, pick + 1, hi);
}

// Boundary cycle of the face on the left of dart (u -> v).
inline std::vector<std::int32_t> face_left_of(const Triangulation& t, std::int32_t u,
                                              std::int32_t v) {
  std::vector<std::int32_t> cyc;
  std::int32_t a = u, b = v;
  const std::size_t guard = 4 * t.edge_count() + 8;
  std::size_t steps = 0;
  do {
    cyc.push_back(a);
    const std::int32_t c = t.cw_successor(b, a);
    a = b;
    b = c;
    if (++steps > guard) throw std::logic_error("face walk failed to close");
  } while (!(a == u && b == v));
  return cyc;
}

}  // namespace detail

inline Triangulation build_cdt(const Instance& inst) {
  const std::size_t n = inst.size();
  Triangulation t(inst);
  if (n < 2) return t;

  std::vector<std::int32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = std::int32_t(i);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const Vec2R &pa = inst.pos(a), &pb = inst.pos(b);
    if (pa.x != pb.x) return pa.x < pb.x;
    return pa.y < pb.y;
  });

  if (n == 2) {
    t.add_edge(order[0], order[1]);
    return t;
  }

  // Incremental triangulation: each point is outside the hull of its
  // lexicographic predecessors and fans out to the whole visible arc.
  std::vector<std::int32_t> hull{order[0], order[1]};
  t.add_edge(order[0], order[1]);
  for (std::size_t k = 2; k < n; ++k) {
    const std::int32_t p = order[k];
    const std::size_t m = hull.size();
    if (m == 2) {
      t.add_edge(p, hull[0]);
      t.add_edge(p, hull[1]);
      if (orientation(inst.ipos(hull[0]), inst.ipos(hull[1]), inst.ipos(p)) > 0)
        hull = {hull[0], hull[1], p};
      else
        hull = {hull[0], p, hull[1]};
      continue;
    }
    std::vector<bool> vis(m);
    for (std::size_t j = 0; j < m; ++j)
      vis[j] = orientation(inst.ipos(hull[j]), inst.ipos(hull[(j + 1) % m]), inst.ipos(p)) < 0;
    std::size_t st = m;
    for (std::size_t j = 0; j < m; ++j)
      if (vis[j] && !vis[(j + m - 1) % m]) {
        st = j;
        break;
      }
    if (st == m) throw std::logic_error("new point sees no hull edge");
    std::size_t len = 0;
    while (len < m && vis[(st + len) % m]) ++len;
    for (std::size_t j = 0; j <= len; ++j) t.add_edge(p, hull[(st + j) % m]);
    std::vector<std::int32_t> next{hull[st], p};
    for (std::size_t j = len; j < m; ++j) next.push_back(hull[(st + j) % m]);
    hull = std::move(next);
  }

  detail::lawson_flips(t, inst);

  // Constraints: carve the corridor of crossed edges, then refill both sides.
  for (const auto& [a, b] : inst.constraints()) {
    if (t.has_edge(a, b)) continue;
    std::vector<std::pair<std::int32_t, std::int32_t>> crossed;
    for (const auto& [u, v] : t.edges())
      if (properly_intersects(inst.ipos(a), inst.ipos(b), inst.ipos(u), inst.ipos(v)))
        crossed.emplace_back(u, v);
    for (const auto& [u, v] : crossed) t.remove_edge(u, v);
    t.add_edge(a, b);
    for (int side = 0; side < 2; ++side) {
      const std::int32_t fu = side == 0 ? a : b;
      const std::int32_t fv = side == 0 ? b : a;
      const std::vector<std::int32_t> cyc = detail::face_left_of(t, fu, fv);
      // cyc = [fu, fv, chain...]
      if (cyc.size() < 3) throw std::logic_error("degenerate cavity while inserting an edge");
      std::vector<std::int32_t> chain(cyc.begin() + 2, cyc.end());
      detail::retriangulate_fan(t, inst, fu, fv, chain, 0, chain.size());
    }
  }

  detail::lawson_flips(t, inst);
  return t;
}

inline GeomGraph build_cdt_graph(const Instance& inst) { return build_cdt(inst).to_graph(); }

// ---------------------------------------------------------------------------
// Validation

struct TriangulationReport {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string what) {
    ok = false;
    if (issues.size() < 32) issues.push_back(std::move(what));
  }
};

// Convex hull indices (counterclockwise) of the instance, by monotone chain.
inline std::vector<std::int32_t> convex_hull_indices(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::int32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = std::int32_t(i);
  std::sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
    const Vec2R &pa = inst.pos(a), &pb = inst.pos(b);
    if (pa.x != pb.x) return pa.x < pb.x;
    return pa.y < pb.y;
  });
  if (n < 3) return idx;
  std::vector<std::int32_t> h;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = h.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t v = idx[pass == 0 ? i : n - 1 - i];
      while (h.size() >= base + 2 &&
             orientation(inst.ipos(h[h.size() - 2]), inst.ipos(h[h.size() - 1]),
                         inst.ipos(v)) <= 0)
        h.pop_back();
      h.push_back(v);
    }
    h.pop_back();
  }
  return h;
}

// Full structural check: constraints present, plane embedding, all bounded
// faces counterclockwise triangles, outer face equal to the convex hull,
// Euler count, and the empty-circle condition on every non-constraint edge.
inline TriangulationReport validate_triangulation(const Instance& inst,
                                                  const Triangulation& t) {
  TriangulationReport rep;
  const std::size_t n = inst.size();
  if (t.size() != n) {
    rep.fail("vertex count mismatch");
    return rep;
  }
  for (const auto& [a, b] : inst.constraints())
    if (!t.has_edge(a, b)) rep.fail("constraint missing from the triangulation");
  if (n < 3) {
    if (n == 2 && t.edge_count() != 1) rep.fail("two points must form one edge");
    return rep;
  }

  const auto edges = t.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (properly_intersects(inst.ipos(edges[i].first), inst.ipos(edges[i].second),
                              inst.ipos(edges[j].first), inst.ipos(edges[j].second)))
        rep.fail("two edges cross");
  for (const auto& [u, v] : edges)
    for (std::size_t w = 0; w < n; ++w)
      if (segment_crosses_point_interior(inst.ipos(u), inst.ipos(v), inst.ipos(w)))
        rep.fail("edge passes through a vertex");

  std::vector<std::vector<std::int32_t>> faces;
  try {
    faces = enumerate_faces(t);
  } catch (const std::exception& e) {
    rep.fail(std::string("face walk failed: ") + e.what());
    return rep;
  }
  std::size_t outer = faces.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int s = sign_of(face_signed_area2(inst, faces[f]));
    if (s < 0) {
      if (outer != faces.size()) rep.fail("more than one clockwise face");
      outer = f;
    } else if (s == 0) {
      rep.fail("face with zero area");
    } else if (faces[f].size() != 3) {
      rep.fail("bounded face is not a triangle");
    }
  }
  if (outer == faces.size()) {
    rep.fail("no outer face found");
    return rep;
  }

  // Outer cycle must be the hull, walked clockwise.
  std::vector<std::int32_t> hull = convex_hull_indices(inst);
  std::vector<std::int32_t> out = faces[outer];
  std::reverse(out.begin(), out.end());  // now counterclockwise
  if (out.size() != hull.size()) {
    rep.fail("outer face does not match the convex hull");
  } else {
    const auto rot = std::find(out.begin(), out.end(), hull[0]);
    bool match = rot != out.end();
    if (match) {
      std::rotate(out.begin(), rot, out.end());
      match = std::equal(out.begin(), out.end(), hull.begin());
    }
    if (!match) rep.fail("outer face does not match the convex hull");
  }

  if (std::int64_t(n) - std::int64_t(t.edge_count()) + std::int64_t(faces.size()) != 2)
    rep.fail("Euler count violated");

  for (const auto& [u, v] : edges) {
    if (inst.is_constraint(u, v)) continue;
    const std::int32_t w = detail::left_apex(t, inst, u, v);
    const std::int32_t z = detail::left_apex(t, inst, v, u);
    if (w < 0 || z < 0) continue;
    if (incircle(inst.ipos(u), inst.ipos(v), inst.ipos(w), inst.ipos(z)) > 0)
      rep.fail("flippable edge: empty-circle condition violated");
  }
  return rep;
}

}  // namespace visroute
