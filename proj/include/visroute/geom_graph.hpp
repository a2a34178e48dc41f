#pragma once

// Geometric graphs over an instance: shared adjacency-list representation for
// the visibility graph, cone graphs, triangulations and derived subgraphs.
// Vertices are instance indices; serialization always speaks ids.

#include "visroute/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace visroute {

enum class GraphKind {
  visibility,
  theta,
  half_theta6,
  cdt,
  subgraph_h,
  subgraph_h_prime,
  custom,
};

inline const char* graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::visibility: return "visibility";
    case GraphKind::theta: return "theta";
    case GraphKind::half_theta6: return "half-theta6";
    case GraphKind::cdt: return "cdt";
    case GraphKind::subgraph_h: return "subgraph-h";
    case GraphKind::subgraph_h_prime: return "subgraph-h-prime";
    case GraphKind::custom: return "custom";
  }
  return "custom";
}

struct GeomGraph {
  GraphKind kind = GraphKind::custom;
  std::vector<std::vector<std::int32_t>> adj;  // sorted neighbor indices

  explicit GeomGraph(GraphKind k = GraphKind::custom, std::size_t n = 0) : kind(k), adj(n) {}

  std::size_t size() const { return adj.size(); }

  void add_edge(std::size_t a, std::size_t b) {
    adj[a].push_back(std::int32_t(b));
    adj[b].push_back(std::int32_t(a));
  }

  void finish() {
    for (auto& list : adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  bool has_edge(std::size_t a, std::size_t b) const {
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), std::int32_t(b));
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj) total += list.size();
    return total / 2;
  }

  // Unique undirected edges as (low, high) index pairs, sorted.
  std::vector<std::pair<std::int32_t, std::int32_t>> edges() const {
    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    out.reserve(edge_count());
    for (std::size_t a = 0; a < adj.size(); ++a)
      for (std::int32_t b : adj[a])
        if (std::size_t(b) > a) out.emplace_back(std::int32_t(a), b);
    return out;
  }
};

// Exact plane-embedding check: no two edges may properly cross and no edge
// may pass through a third vertex.  Returns a description of the first
// violation, or an empty string.
inline std::string find_planarity_violation(const Instance& inst, const GeomGraph& g) {
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto [a, b] = es[i];
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [c, d] = es[j];
      if (properly_intersects(inst.ipos(std::size_t(a)), inst.ipos(std::size_t(b)),
                              inst.ipos(std::size_t(c)), inst.ipos(std::size_t(d))))
        return "edges (" + std::to_string(inst.id_of(std::size_t(a))) + "," +
               std::to_string(inst.id_of(std::size_t(b))) + ") and (" +
               std::to_string(inst.id_of(std::size_t(c))) + "," +
               std::to_string(inst.id_of(std::size_t(d))) + ") cross";
    }
    for (std::size_t v = 0; v < inst.size(); ++v) {
      if (std::int32_t(v) == a || std::int32_t(v) == b) continue;
      if (segment_crosses_point_interior(inst.ipos(std::size_t(a)), inst.ipos(std::size_t(b)),
                                         inst.ipos(v)))
        return "edge (" + std::to_string(inst.id_of(std::size_t(a))) + "," +
               std::to_string(inst.id_of(std::size_t(b))) + ") passes through vertex " +
               std::to_string(inst.id_of(v));
    }
  }
  return {};
}

inline std::string serialize_graph_json(const Instance& inst, const GeomGraph& g) {
  nlohmann::ordered_json doc;
  doc["kind"] = graph_kind_name(g.kind);
  doc["n"] = inst.size();
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges()) {
    const auto ia = inst.id_of(a), ib = inst.id_of(b);
    doc["edges"].push_back({std::min(ia, ib), std::max(ia, ib)});
  }
  return doc.dump(2) + "\n";
}

struct Path {
  std::vector<std::int32_t> verts;  // instance indices, source first

  bool empty() const { return verts.empty(); }
  std::size_t hops() const { return verts.empty() ? 0 : verts.size() - 1; }
};

// Certified enclosure of the Euclidean length of a path.
inline RationalInterval path_length_interval(const Instance& inst, const Path& p,
                                             unsigned bits = 96) {
  RationalInterval total{Rational(0), Rational(0)};
  for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
    total += sqrt_interval(squared_distance(inst.pos(p.verts[i]), inst.pos(p.verts[i + 1])), bits);
  return total;
}

inline double euclidean_length(const Instance& inst, const Path& p) {
  const auto iv = path_length_interval(inst, p, 96);
  return to_double(iv.lo + (iv.hi - iv.lo) / 2);
}

}  // namespace visroute
