#pragma once

// Subgraphs induced by the triangles a source-target segment meets.
//
// H collects every edge of a triangulation triangle whose closed region
// intersects the closed segment st; the triangles are also reported in the
// order the segment meets them (by the rational entry parameter, clipping
// the segment against each triangle).  H is plane and connected.
//
// H' grows H in two rounds: the convex hull edges of H's vertex set, then,
// for every bounded face of the resulting plane graph, all constraint-
// visible chords between that face's boundary vertices.  H' is generally not
// plane; it is the denser structure whose shortest paths are compared
// against the full visibility graph.

#include "visroute/triangulation.hpp"
#include "visroute/visibility.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace visroute {

struct CrossedSubgraph {
  GeomGraph h;
  std::vector<std::array<std::int32_t, 3>> crossed_faces;  // in meeting order along st
  std::vector<std::int32_t> vertices;                      // sorted vertex set of h
};

namespace detail {

// Parameter range [lo, hi] of s + tau * (t - s) inside the closed triangle,
// or an empty range (lo > hi) when they miss each other.
inline std::pair<Rational, Rational> clip_to_triangle(const Vec2I& s, const Vec2I& t,
                                                      const Vec2I& a, const Vec2I& b,
                                                      const Vec2I& c) {
  std::array<Vec2I, 3> tri{a, b, c};
  if (orientation(a, b, c) < 0) std::swap(tri[1], tri[2]);  // counterclockwise
  Rational lo(0), hi(1);
  const Vec2I d = t - s;
  for (int i = 0; i < 3; ++i) {
    const Vec2I &p = tri[i], &q = tri[(i + 1) % 3];
    const Int A = cross(q - p, s - p);  // f(tau) = A + tau * B, inside: f >= 0
    const Int B = cross(q - p, d);
    const int sb = sign_of(B);
    if (sb == 0) {
      if (sign_of(A) < 0) return {Rational(1), Rational(0)};
      continue;
    }
    const Rational bound = -Rational(A) / Rational(B);
    if (sb > 0)
      lo = std::max(lo, bound);
    else
      hi = std::min(hi, bound);
  }
  return {lo, hi};
}

}  // namespace detail

inline CrossedSubgraph extract_crossed_subgraph(const Instance& inst, const Triangulation& tri,
                                                std::int32_t s, std::int32_t t) {
  CrossedSubgraph out;
  out.h = GeomGraph(GraphKind::subgraph_h, inst.size());
  const Vec2I &ps = inst.ipos(s), &pt = inst.ipos(t);

  std::vector<std::pair<Rational, std::array<std::int32_t, 3>>> hits;
  for (const auto& face : enumerate_faces(tri)) {
    if (face.size() != 3 || sign_of(face_signed_area2(inst, face)) <= 0) continue;
    const auto [lo, hi] = detail::clip_to_triangle(ps, pt, inst.ipos(face[0]),
                                                   inst.ipos(face[1]), inst.ipos(face[2]));
    if (lo > hi) continue;
    hits.push_back({lo, {face[0], face[1], face[2]}});
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::int32_t> verts;
  for (const auto& [param, f] : hits) {
    out.crossed_faces.push_back(f);
    for (int i = 0; i < 3; ++i) {
      out.h.add_edge(std::size_t(f[i]), std::size_t(f[(i + 1) % 3]));
      verts.push_back(f[i]);
    }
  }
  out.h.finish();
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.vertices = std::move(verts);
  return out;
}

struct DenseCrossedSubgraph {
  GeomGraph g;
  std::vector<std::pair<std::int32_t, std::int32_t>> hull_edges;
  std::vector<std::pair<std::int32_t, std::int32_t>> chord_edges;
};

inline DenseCrossedSubgraph build_dense_crossed_subgraph(const Instance& inst,
                                                         const CrossedSubgraph& cs) {
  DenseCrossedSubgraph out;
  out.g = GeomGraph(GraphKind::subgraph_h_prime, inst.size());
  for (std::size_t u = 0; u < cs.h.adj.size(); ++u)
    for (std::int32_t v : cs.h.adj[u])
      if (std::int32_t(u) < v) out.g.add_edge(u, std::size_t(v));

  // Convex hull of the vertex set, as a plane rotation graph together with h.
  Triangulation plane(inst);  // used purely as a plane rotation structure
  for (std::size_t u = 0; u < cs.h.adj.size(); ++u)
    for (std::int32_t v : cs.h.adj[u])
      if (std::int32_t(u) < v) plane.add_edge(std::int32_t(u), v);

  const std::size_t m = cs.vertices.size();
  if (m >= 3) {
    std::vector<std::int32_t> idx = cs.vertices;
    std::sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
      const Vec2R &pa = inst.pos(a), &pb = inst.pos(b);
      if (pa.x != pb.x) return pa.x < pb.x;
      return pa.y < pb.y;
    });
    std::vector<std::int32_t> h;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t base = h.size();
      for (std::size_t i = 0; i < m; ++i) {
        const std::int32_t v = idx[pass == 0 ? i : m - 1 - i];
        while (h.size() >= base + 2 &&
               orientation(inst.ipos(h[h.size() - 2]), inst.ipos(h[h.size() - 1]),
                           inst.ipos(v)) <= 0)
          h.pop_back();
        h.push_back(v);
      }
      h.pop_back();
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      const std::int32_t a = h[i], b = h[(i + 1) % h.size()];
      if (!plane.has_edge(a, b)) {
        plane.add_edge(a, b);
        out.hull_edges.emplace_back(std::min(a, b), std::max(a, b));
        out.g.add_edge(std::size_t(std::min(a, b)), std::size_t(std::max(a, b)));
      }
    }
  }

  // Bounded faces of h + hull: connect all chords whose view is clear of the
  // *relevant* constraints — only those with both endpoints in the subgraph
  // block here, so a chord may legitimately cross an outside constraint.
  std::vector<bool> in_h(inst.size(), false);
  for (std::int32_t v : cs.vertices) in_h[v] = true;
  std::vector<std::pair<std::int32_t, std::int32_t>> blocking;
  for (const auto& [a, b] : inst.constraints())
    if (in_h[a] && in_h[b]) blocking.emplace_back(a, b);

  for (const auto& face : enumerate_faces(plane)) {
    if (face.empty() || sign_of(face_signed_area2(inst, face)) <= 0) continue;
    std::vector<std::int32_t> vs = face;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (plane.has_edge(vs[i], vs[j])) continue;
        bool clear = true;
        for (const auto& [a, b] : blocking) {
          if ((a == vs[i] && b == vs[j]) || (a == vs[j] && b == vs[i])) continue;
          if (properly_intersects(inst.ipos(vs[i]), inst.ipos(vs[j]), inst.ipos(a),
                                  inst.ipos(b))) {
            clear = false;
            break;
          }
        }
        if (!clear) continue;
        out.chord_edges.emplace_back(vs[i], vs[j]);
        out.g.add_edge(std::size_t(vs[i]), std::size_t(vs[j]));
      }
  }
  out.g.finish();
  std::sort(out.chord_edges.begin(), out.chord_edges.end());
  out.chord_edges.erase(std::unique(out.chord_edges.begin(), out.chord_edges.end()),
                        out.chord_edges.end());
  return out;
}

}  // namespace visroute
