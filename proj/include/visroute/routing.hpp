#pragma once

// Local routing.  A router is a step function: it sees the endpoints, the
// packet for the current vertex (its visibility neighborhood) and an O(1)
// message memory, and returns the next vertex.  The engine enforces the
// locality contract: at most `max_memory_words` words of memory, moves only
// along packet edges, and a global step budget as a kill switch.
//
// Three families ship here:
//   * theta: memoryless greedy cone stepping; may get stuck.
//   * face1 / face2: face-walking on a locally identified plane subgraph.
//     face1 scans a whole face for the boundary crossing nearest the target
//     before walking to it; face2 switches faces at the first crossing it
//     encounters.  Both advance an anchor point along the source-target
//     segment and never get stuck, though they can prove unreachability by
//     completing a face cycle without finding a crossing.
//   * face1 over the crossed-triangle subgraph: same walker, plane edges
//     filtered to triangulation edges whose incident triangle meets the
//     source-target segment.
//
// Face walks use the rotation convention "next dart = clockwise successor of
// the reversed arrival dart", which traverses every face with its interior on
// the left (inner faces counterclockwise, the outer face clockwise).

#include "visroute/cones.hpp"
#include "visroute/geom_graph.hpp"
#include "visroute/local_ident.hpp"
#include "visroute/visibility.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace visroute {

// ---------------------------------------------------------------------------
// Contract types

using MemoryWord = std::variant<std::int64_t, Vec2R>;

struct PointRef {
  std::int64_t id = -1;
  Vec2R p;
};

struct RoutingQuery {
  PointRef s, t;
  const Neighborhood& nbhd;              // packet for the current vertex
  const std::vector<MemoryWord>& memory; // message memory, owned by the engine
};

struct StepDecision {
  enum class Kind { move, stuck, unreachable } kind = Kind::move;
  std::int64_t next = -1;
  std::vector<MemoryWord> memory;
  std::string note;

  static StepDecision move_to(std::int64_t id, std::vector<MemoryWord> mem) {
    StepDecision d;
    d.kind = Kind::move;
    d.next = id;
    d.memory = std::move(mem);
    return d;
  }
  static StepDecision stuck_at(std::string why) {
    StepDecision d;
    d.kind = Kind::stuck;
    d.note = std::move(why);
    return d;
  }
  static StepDecision give_up(std::string why) {
    StepDecision d;
    d.kind = Kind::unreachable;
    d.note = std::move(why);
    return d;
  }
};

using StepFn = std::function<StepDecision(const RoutingQuery&)>;

enum class RouteOutcome { delivered, stuck, unreachable, budget_exceeded };

inline const char* route_outcome_name(RouteOutcome o) {
  switch (o) {
    case RouteOutcome::delivered: return "delivered";
    case RouteOutcome::stuck: return "stuck";
    case RouteOutcome::unreachable: return "unreachable";
    case RouteOutcome::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

struct RouteStep {
  std::int64_t from = -1, to = -1;
  std::vector<MemoryWord> memory;  // memory carried into the next vertex
};

struct RouteTrace {
  std::string algo;
  std::int64_t s_id = -1, t_id = -1;
  RouteOutcome outcome = RouteOutcome::budget_exceeded;
  std::string note;
  std::vector<RouteStep> steps;
  double total_length = 0.0;
  std::size_t edge_traversals = 0;

  bool delivered() const { return outcome == RouteOutcome::delivered; }
};

struct RouterConfig {
  std::size_t max_memory_words = 4;
  std::size_t budget = 0;  // 0 -> 40 n^2 + 400
};

// ---------------------------------------------------------------------------
// Engine

inline RouteTrace run_router(const Instance& inst, const GeomGraph& base, std::int64_t s_id,
                             std::int64_t t_id, const StepFn& fn, std::string algo,
                             RouterConfig cfg = {}) {
  RouteTrace tr;
  tr.algo = std::move(algo);
  tr.s_id = s_id;
  tr.t_id = t_id;
  const std::size_t n = inst.size();
  const std::size_t budget = cfg.budget ? cfg.budget : 40 * n * n + 400;

  const PointRef s{s_id, inst.pos(inst.index_of(s_id))};
  const PointRef t{t_id, inst.pos(inst.index_of(t_id))};

  std::int32_t u = inst.index_of(s_id);
  const std::int32_t tgt = inst.index_of(t_id);
  std::vector<MemoryWord> memory;

  tr.outcome = RouteOutcome::budget_exceeded;
  for (std::size_t it = 0; it <= budget; ++it) {
    if (u == tgt) {
      tr.outcome = RouteOutcome::delivered;
      break;
    }
    if (it == budget) break;  // budget spent without delivery
    const Neighborhood nb = make_neighborhood(inst, base, std::size_t(u));
    const RoutingQuery q{s, t, nb, memory};
    StepDecision d = fn(q);
    if (d.kind == StepDecision::Kind::stuck) {
      tr.outcome = RouteOutcome::stuck;
      tr.note = d.note;
      break;
    }
    if (d.kind == StepDecision::Kind::unreachable) {
      tr.outcome = RouteOutcome::unreachable;
      tr.note = d.note;
      break;
    }
    if (d.memory.size() > cfg.max_memory_words)
      throw std::logic_error("router exceeded its memory budget");
    bool legal = false;
    for (const auto& e : nb.nbrs)
      if (e.id == d.next) {
        legal = true;
        break;
      }
    if (!legal) throw std::logic_error("router stepped outside the packet neighborhood");
    tr.steps.push_back(RouteStep{inst.id_of(u), d.next, d.memory});
    u = inst.index_of(d.next);
    memory = std::move(d.memory);
  }

  tr.edge_traversals = tr.steps.size();
  if (!tr.steps.empty()) {
    Path p;
    p.verts.reserve(tr.steps.size() + 1);
    p.verts.push_back(inst.index_of(tr.steps.front().from));
    for (const auto& st : tr.steps) p.verts.push_back(inst.index_of(st.to));
    tr.total_length = euclidean_length(inst, p);
  }
  return tr;
}

// ---------------------------------------------------------------------------
// Theta stepping (memoryless)

inline StepFn make_theta_stepper() {
  return [](const RoutingQuery& q) -> StepDecision {
    const Neighborhood& nb = q.nbhd;
    const int region = cone_of6(q.t.p - nb.self);
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < nb.nbrs.size(); ++k) {
      if (cone_of6(nb.inbrs[k] - nb.iself) != region) continue;
      if (!best) {
        best = k;
        continue;
      }
      const int cmp = sign_of(bisector_projection6(region, nb.inbrs[k] - nb.inbrs[*best]));
      if (cmp == 0) throw std::domain_error("projection tie during theta routing");
      if (cmp < 0) best = k;
    }
    if (!best)
      return StepDecision::stuck_at("no neighbor in the cone facing the target");
    return StepDecision::move_to(nb.nbrs[*best].id, {});
  };
}

// ---------------------------------------------------------------------------
// Face walking

// Selects which packet edges belong to the plane subgraph being walked.
using PlaneFilter = std::function<std::vector<std::size_t>(const RoutingQuery&)>;

// The locally identified constrained half-theta edges at the current vertex.
inline PlaneFilter plane_filter_half_theta6() {
  return [](const RoutingQuery& q) {
    std::vector<std::size_t> out;
    const auto edges = local_half_theta6_edges(q.nbhd);
    for (const auto& [self, other] : edges)
      for (std::size_t k = 0; k < q.nbhd.nbrs.size(); ++k)
        if (q.nbhd.nbrs[k].id == other) {
          out.push_back(k);
          break;
        }
    std::sort(out.begin(), out.end());
    return out;
  };
}

// Every packet edge; for walking a base graph that is already plane.
inline PlaneFilter plane_filter_all() {
  return [](const RoutingQuery& q) {
    std::vector<std::size_t> out(q.nbhd.nbrs.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
  };
}

// Triangulation edges with an incident triangle meeting the closed segment
// from source to target.  The packet must come from a triangulation: the
// wedge between rotation-consecutive neighbors spanning less than a half turn
// is then exactly an incident triangle.
inline PlaneFilter plane_filter_crossed_triangles() {
  return [](const RoutingQuery& q) {
    const Neighborhood& nb = q.nbhd;
    const std::size_t deg = nb.nbrs.size();
    std::vector<std::size_t> ring(deg);
    for (std::size_t k = 0; k < deg; ++k) ring[k] = k;
    // Clockwise from north; packet directions are pairwise non-collinear.
    auto half = [&](std::size_t k) {
      const Vec2I d = nb.inbrs[k] - nb.iself;
      const int sx = sign_of(d.x);
      return (sx > 0 || (sx == 0 && sign_of(d.y) > 0)) ? 0 : 1;
    };
    std::sort(ring.begin(), ring.end(), [&](std::size_t a, std::size_t b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return sign_of(cross(nb.inbrs[a] - nb.iself, nb.inbrs[b] - nb.iself)) < 0;
    });
    std::vector<std::size_t> out;
    if (deg == 1) {
      if (segments_intersect_closed(nb.self, nb.nbrs[0].p, q.s.p, q.t.p)) out.push_back(0);
      return out;
    }
    for (std::size_t i = 0; i < deg; ++i) {
      const std::size_t v = ring[i];
      bool keep = false;
      for (int side = 0; side < 2 && !keep; ++side) {
        const std::size_t w = side == 0 ? ring[(i + 1) % deg] : ring[(i + deg - 1) % deg];
        if (w == v) continue;
        const Vec2I dv = nb.inbrs[v] - nb.iself;
        const Vec2I dw = nb.inbrs[w] - nb.iself;
        // side 0: w clockwise of v; wedge is a triangle when it spans < pi.
        const int cr = sign_of(side == 0 ? cross(dv, dw) : cross(dw, dv));
        if (cr >= 0) continue;
        if (triangle_intersects_segment(nb.self, nb.nbrs[v].p, nb.nbrs[w].p, q.s.p, q.t.p))
          keep = true;
      }
      if (keep) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
}

enum class FaceMode { scan_then_walk, switch_eagerly };  // face1, face2

namespace detail {

struct FaceState {
  bool seek = false;
  bool best_valid = false;
  Vec2R anchor;
  std::int64_t prev = -1;
  Vec2R best;
};

inline FaceState decode_face_memory(const std::vector<MemoryWord>& mem, const Vec2R& source) {
  FaceState st;
  st.anchor = source;
  if (mem.empty()) return st;
  if (mem.size() < 3) throw std::logic_error("malformed face-routing memory");
  const std::int64_t flags = std::get<std::int64_t>(mem[0]);
  st.seek = (flags & 1) != 0;
  st.best_valid = (flags & 2) != 0;
  st.anchor = std::get<Vec2R>(mem[1]);
  st.prev = std::get<std::int64_t>(mem[2]);
  if (st.best_valid || st.seek) {
    if (mem.size() < 4) throw std::logic_error("malformed face-routing memory");
    st.best = std::get<Vec2R>(mem[3]);
  }
  return st;
}

inline std::vector<MemoryWord> encode_face_memory(const FaceState& st, FaceMode mode) {
  std::vector<MemoryWord> mem;
  mem.emplace_back(std::int64_t((st.seek ? 1 : 0) | (st.best_valid ? 2 : 0)));
  mem.emplace_back(st.anchor);
  mem.emplace_back(st.prev);
  if (mode == FaceMode::scan_then_walk && (st.best_valid || st.seek)) mem.emplace_back(st.best);
  return mem;
}

// Among `candidates` (packet indices), the direction with the smallest
// strictly positive clockwise angle from `ref`.  Rational arithmetic: ref may
// involve the target, which lives outside the packet's integer shadow.
inline std::optional<std::size_t> first_clockwise(const Neighborhood& nb, const Vec2R& ref,
                                                  const std::vector<std::size_t>& candidates,
                                                  std::optional<std::size_t> skip) {
  std::optional<std::size_t> best;
  auto dir = [&](std::size_t k) { return nb.nbrs[k].p - nb.self; };
  auto halfplane = [&](const Vec2R& v) { return sign_of(cross(ref, v)) < 0 ? 0 : 1; };
  for (std::size_t k : candidates) {
    if (skip && k == *skip) continue;
    if (!best) {
      best = k;
      continue;
    }
    const Vec2R a = dir(k), b = dir(*best);
    const int ha = halfplane(a), hb = halfplane(b);
    bool less;
    if (ha != hb)
      less = ha < hb;
    else
      less = sign_of(cross(a, b)) < 0;
    if (less) best = k;
  }
  return best;
}

}  // namespace detail

// Face-walking step function.  `mode` picks the switching rule; `filter`
// picks the plane subgraph.
inline StepFn make_face_stepper(FaceMode mode, PlaneFilter filter) {
  return [mode, filter = std::move(filter)](const RoutingQuery& q) -> StepDecision {
    using detail::FaceState;
    const Neighborhood& nb = q.nbhd;
    const std::vector<std::size_t> plane = filter(q);
    if (plane.empty())
      return StepDecision::give_up("current vertex is isolated in the plane subgraph");

    FaceState st = detail::decode_face_memory(q.memory, q.s.p);

    // Start dart of the face around the source: first plane direction
    // clockwise from the ray toward the target.
    auto source_start = [&]() -> std::size_t {
      auto r = detail::first_clockwise(nb, q.t.p - q.s.p, plane, std::nullopt);
      return *r;  // plane nonempty
    };

    // Resolve the dart to examine first.
    std::size_t x;
    bool armed = true;  // completion test active?
    if (st.prev < 0) {
      x = source_start();
      armed = false;  // walk is only starting
    } else {
      std::optional<std::size_t> prev_idx;
      for (std::size_t k : plane)
        if (nb.nbrs[k].id == st.prev) prev_idx = k;
      if (!prev_idx)
        throw std::logic_error("arrival edge missing from the plane subgraph at this vertex");
      auto succ = detail::first_clockwise(nb, nb.nbrs[*prev_idx].p - nb.self, plane, prev_idx);
      x = succ ? *succ : *prev_idx;  // lone neighbor: bounce back
    }

    const std::size_t guard = 4 * plane.size() + 8;
    for (std::size_t round = 0; round < guard; ++round) {
      const Vec2R& xp = nb.nbrs[x].p;

      // Completion: about to re-take the dart the current face walk started
      // from.  At the source face that is the computed start dart; elsewhere
      // the start dart is the one whose edge carries the anchor with the
      // walked face on its left.
      bool is_start = false;
      if (armed) {
        if (st.anchor == q.s.p) {  // still scanning the face around the source
          is_start = (nb.self_id == q.s.id) && (x == source_start());
        } else {
          is_start = segment_crosses_point_interior(nb.self, xp, st.anchor) &&
                     sign_of(cross(xp - nb.self, q.t.p - st.anchor)) > 0;
        }
      }
      if (is_start) {
        if (mode == FaceMode::switch_eagerly)
          return StepDecision::give_up("face cycle closed without an improving crossing");
        if (st.seek)
          throw std::logic_error("seek pass closed the face without finding its crossing");
        if (!st.best_valid)
          return StepDecision::give_up("face cycle closed, no boundary edge crosses the line to the target");
        st.seek = true;  // scan done; walk to the recorded crossing
      }

      // Seek pass: switch faces at the edge carrying the recorded crossing.
      if (mode == FaceMode::scan_then_walk && st.seek &&
          segment_crosses_point_interior(nb.self, xp, st.best)) {
        const Vec2R c = st.best;
        st.seek = false;
        st.best_valid = false;
        st.anchor = c;
        if (sign_of(cross(xp - nb.self, q.t.p - c)) > 0) {
          // The face past the crossing lies left of this very dart: take it.
          st.prev = nb.self_id;
          return StepDecision::move_to(nb.nbrs[x].id, detail::encode_face_memory(st, mode));
        }
        // Otherwise pretend we arrived from x and continue around the new face.
        auto succ = detail::first_clockwise(nb, xp - nb.self, plane, x);
        armed = true;
        x = succ ? *succ : x;
        continue;
      }

      // Crossing bookkeeping against the open segment (anchor, target).
      if (properly_intersects(st.anchor, q.t.p, nb.self, xp)) {
        const Vec2R c = proper_intersection_point(st.anchor, q.t.p, nb.self, xp);
        if (mode == FaceMode::switch_eagerly) {
          st.anchor = c;
          if (sign_of(cross(xp - nb.self, q.t.p - c)) > 0) {
            st.prev = nb.self_id;
            return StepDecision::move_to(nb.nbrs[x].id, detail::encode_face_memory(st, mode));
          }
          auto succ = detail::first_clockwise(nb, xp - nb.self, plane, x);
          armed = true;
          x = succ ? *succ : x;
          continue;
        }
        if (!st.seek) {
          if (!st.best_valid ||
              squared_distance(c, q.t.p) < squared_distance(st.best, q.t.p)) {
            st.best = c;
            st.best_valid = true;
          }
        }
      }

      // Default: take the dart.
      st.prev = nb.self_id;
      return StepDecision::move_to(nb.nbrs[x].id, detail::encode_face_memory(st, mode));
    }
    throw std::logic_error("face step failed to converge at one vertex");
  };
}

// ---------------------------------------------------------------------------
// Packaged algorithms

enum class RouteAlgo { theta, face1, face2, face1_on_h };

inline const char* route_algo_name(RouteAlgo a) {
  switch (a) {
    case RouteAlgo::theta: return "theta";
    case RouteAlgo::face1: return "face1";
    case RouteAlgo::face2: return "face2";
    case RouteAlgo::face1_on_h: return "face1-on-h";
  }
  return "?";
}

// `base` must match the algorithm: the theta graph for theta stepping, the
// visibility graph for face1/face2, the triangulation for face1_on_h.
inline RouteTrace route(const Instance& inst, const GeomGraph& base, RouteAlgo algo,
                        std::int64_t s_id, std::int64_t t_id, RouterConfig cfg = {}) {
  switch (algo) {
    case RouteAlgo::theta:
      return run_router(inst, base, s_id, t_id, make_theta_stepper(), route_algo_name(algo),
                        cfg);
    case RouteAlgo::face1:
      return run_router(inst, base, s_id, t_id,
                        make_face_stepper(FaceMode::scan_then_walk, plane_filter_half_theta6()),
                        route_algo_name(algo), cfg);
    case RouteAlgo::face2:
      return run_router(inst, base, s_id, t_id,
                        make_face_stepper(FaceMode::switch_eagerly, plane_filter_half_theta6()),
                        route_algo_name(algo), cfg);
    case RouteAlgo::face1_on_h:
      return run_router(
          inst, base, s_id, t_id,
          make_face_stepper(FaceMode::scan_then_walk, plane_filter_crossed_triangles()),
          route_algo_name(algo), cfg);
  }
  throw std::invalid_argument("unknown routing algorithm");
}

// ---------------------------------------------------------------------------
// Trace serialization

inline nlohmann::ordered_json trace_to_json(const RouteTrace& tr) {
  nlohmann::ordered_json j;
  j["algo"] = tr.algo;
  j["s"] = tr.s_id;
  j["t"] = tr.t_id;
  j["delivered"] = tr.delivered();
  j["outcome"] = route_outcome_name(tr.outcome);
  if (!tr.note.empty()) j["note"] = tr.note;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& st : tr.steps) {
    nlohmann::ordered_json step;
    step["from"] = st.from;
    step["to"] = st.to;
    step["memory"] = nlohmann::ordered_json::array();
    for (const auto& w : st.memory) {
      nlohmann::ordered_json word;
      if (std::holds_alternative<std::int64_t>(w)) {
        word["kind"] = "id";
        word["value"] = std::get<std::int64_t>(w);
      } else {
        const Vec2R& p = std::get<Vec2R>(w);
        word["kind"] = "point";
        word["x"] = format_rational(p.x);
        word["y"] = format_rational(p.y);
      }
      step["memory"].push_back(std::move(word));
    }
    j["steps"].push_back(std::move(step));
  }
  j["total_length"] = tr.total_length;
  j["edge_traversals"] = tr.edge_traversals;
  return j;
}

}  // namespace visroute
