#pragma once

// Weighted shortest paths with certified error bounds.
//
// Dijkstra runs on 50-digit floating point keys (ties broken by vertex id,
// so runs are deterministic).  Because edge weights are square roots of
// rationals, float keys alone cannot certify optimality; a second pass turns
// the result into an enclosure: tree-path lengths are evaluated in interval
// arithmetic and the triangle inequality phi(v) <= phi(u) + w(u,v) + eps is
// verified on every directed edge.  Any s-t path then has length at least
// phi(t) - n*eps, which brackets the true distance around the tree path.
// Interval widths escalate through 64..512 bits before giving up.

#include "visroute/cones.hpp"  // BigFloat
#include "visroute/geom_graph.hpp"
#include "visroute/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace visroute {

struct DijkstraResult {
  std::vector<BigFloat> dist;
  std::vector<std::int32_t> parent;  // -1 at the root and on unreached vertices
  std::int32_t source = -1;

  bool reached(std::size_t v) const { return parent[v] >= 0 || std::int32_t(v) == source; }
};

inline DijkstraResult dijkstra(const Instance& inst, const GeomGraph& g, std::int32_t s) {
  const std::size_t n = inst.size();
  DijkstraResult res;
  res.dist.assign(n, BigFloat(0));
  res.parent.assign(n, -1);
  res.source = s;
  std::vector<bool> done(n, false), seen(n, false);
  using Item = std::pair<BigFloat, std::int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(BigFloat(0), s);
  seen[s] = true;
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    for (std::int32_t v : g.adj[u]) {
      const BigFloat w =
          sqrt(squared_distance(inst.pos(u), inst.pos(v)).convert_to<BigFloat>());
      const BigFloat nd = d + w;
      if (!seen[v] || nd < res.dist[v]) {
        seen[v] = true;
        res.dist[v] = nd;
        res.parent[v] = u;
        pq.emplace(nd, v);
      }
    }
  }
  return res;
}

inline Path extract_path(const DijkstraResult& res, std::int32_t t) {
  Path p;
  if (!res.reached(t)) return p;
  for (std::int32_t v = t; v >= 0; v = res.parent[v]) {
    p.verts.push_back(v);
    if (v == res.source) break;
  }
  std::reverse(p.verts.begin(), p.verts.end());
  return p;
}

inline Path shortest_path(const Instance& inst, const GeomGraph& g, std::int32_t s,
                          std::int32_t t) {
  return extract_path(dijkstra(inst, g, s), t);
}

// Enclosure of the true shortest-path distance between s and t, or reachable
// = false.  Certification: interval tree-path lengths plus the per-edge
// triangle check described in the header comment.  Throws when 512 bits of
// precision still cannot separate the quantities involved.
struct CertifiedDistance {
  bool reachable = false;
  RationalInterval value;  // encloses the exact shortest-path length
  Path tree_path;
};

inline CertifiedDistance certified_distance(const Instance& inst, const GeomGraph& g,
                                            std::int32_t s, std::int32_t t) {
  const Rational eps = Rational(1, Int("1000000000000000000000000000000"));  // 1e-30
  const std::size_t n = inst.size();
  const DijkstraResult res = dijkstra(inst, g, s);
  CertifiedDistance out;
  if (!res.reached(t)) return out;
  out.reachable = true;
  out.tree_path = extract_path(res, t);

  // Vertices in tree order (parents first).
  std::vector<std::int32_t> order;
  order.reserve(n);
  order.push_back(s);
  {
    std::vector<std::vector<std::int32_t>> kids(n);
    for (std::size_t v = 0; v < n; ++v)
      if (res.parent[v] >= 0) kids[res.parent[v]].push_back(std::int32_t(v));
    for (std::size_t h = 0; h < order.size(); ++h)
      for (std::int32_t c : kids[order[h]]) order.push_back(c);
  }

  for (unsigned bits = 64; bits <= 512; bits *= 2) {
    std::vector<RationalInterval> phi(n, RationalInterval{Rational(0), Rational(0)});
    for (std::int32_t v : order) {
      if (v == s) continue;
      const std::int32_t u = res.parent[v];
      phi[v] = phi[u] + sqrt_interval(squared_distance(inst.pos(u), inst.pos(v)), bits);
    }
    bool certified = true;
    for (std::size_t u = 0; u < n && certified; ++u) {
      if (!res.reached(u)) continue;
      for (std::int32_t v : g.adj[u]) {
        const RationalInterval w = sqrt_interval(squared_distance(inst.pos(u), inst.pos(v)), bits);
        if (phi[v].hi > phi[u].lo + w.lo + eps) {
          certified = false;
          break;
        }
      }
    }
    if (certified) {
      RationalInterval enc = phi[t];
      enc.lo -= Rational(Int(n)) * eps;
      if (enc.lo < 0) enc.lo = 0;
      out.value = enc;
      return out;
    }
  }
  throw std::domain_error("shortest-path certificate failed at 512 bits of precision");
}

// Compare the total lengths of two vertex paths: -1, 0, +1.  Escalates the
// interval precision; on persistent overlap falls back to comparing the
// multisets of squared edge lengths (equal multisets force equal sums) and
// otherwise refuses.
inline int compare_path_lengths(const Instance& inst, const Path& a, const Path& b) {
  for (unsigned bits = 64; bits <= 512; bits *= 2) {
    const RationalInterval ia = path_length_interval(inst, a, bits);
    const RationalInterval ib = path_length_interval(inst, b, bits);
    if (ia.hi < ib.lo) return -1;
    if (ib.hi < ia.lo) return 1;
  }
  auto edge_squares = [&](const Path& p) {
    std::vector<Rational> sq;
    for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
      sq.push_back(squared_distance(inst.pos(p.verts[i]), inst.pos(p.verts[i + 1])));
    std::sort(sq.begin(), sq.end());
    return sq;
  };
  if (edge_squares(a) == edge_squares(b)) return 0;
  throw std::domain_error("path lengths indistinguishable at 512 bits of precision");
}

// Brute-force oracle: enumerate every simple path between s and t and keep
// the shortest.  Exponential; guarded to small instances.
inline Path exhaustive_shortest_path(const Instance& inst, const GeomGraph& g, std::int32_t s,
                                     std::int32_t t) {
  const std::size_t n = inst.size();
  if (n > 12) throw std::invalid_argument("exhaustive path search is limited to 12 vertices");
  Path best;
  Path cur;
  std::vector<bool> used(n, false);
  cur.verts.push_back(s);
  used[s] = true;
  auto rec = [&](auto&& self, std::int32_t u) -> void {
    if (u == t) {
      if (best.verts.empty() || compare_path_lengths(inst, cur, best) < 0) best = cur;
      return;
    }
    for (std::int32_t v : g.adj[u]) {
      if (used[v]) continue;
      used[v] = true;
      cur.verts.push_back(v);
      self(self, v);
      cur.verts.pop_back();
      used[v] = false;
    }
  };
  rec(rec, s);
  return best;
}

}  // namespace visroute
