#pragma once

// Routing-quality measurement: run an algorithm over seeded random instances
// and report how far its walks are from graph-optimal, plus a growth probe
// that shows the scan-based face walker has no constant competitive ratio.
// Everything here is floating-point measurement for reporting; the certified
// rational machinery stays in the inequality verifiers.

#include "visroute/lower_bound.hpp"
#include "visroute/random_gen.hpp"
#include "visroute/routing.hpp"
#include "visroute/shortest_path.hpp"
#include "visroute/theta_graphs.hpp"
#include "visroute/triangulation.hpp"
#include "visroute/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace visroute {

inline GeomGraph build_graph_of_kind(const Instance& inst, GraphKind kind) {
  switch (kind) {
    case GraphKind::visibility: return build_visibility_graph(inst);
    case GraphKind::theta: return build_constrained_theta(inst, 6);
    case GraphKind::half_theta6: return build_constrained_half_theta6(inst);
    case GraphKind::cdt: return build_cdt_graph(inst);
    default: break;
  }
  throw std::invalid_argument("cannot build a graph of this kind directly");
}

// Base graph an algorithm must be run on.  The face walkers derive their
// plane subgraph from full visibility packets, and the crossed-triangle
// walker from triangulation packets, so for those the base is fixed; only
// greedy cone stepping is free to route whichever graph was requested.
inline GraphKind routing_base_kind(RouteAlgo algo, GraphKind requested) {
  switch (algo) {
    case RouteAlgo::theta: return requested;
    case RouteAlgo::face1:
    case RouteAlgo::face2: return GraphKind::visibility;
    case RouteAlgo::face1_on_h: return GraphKind::cdt;
  }
  return requested;
}

struct MeasureParams {
  std::size_t trials = 20;     // number of random instances
  std::size_t n = 16;
  double density = 0.3;
  std::uint64_t seed = 1;      // instance k uses seed + k
  GraphKind graph = GraphKind::half_theta6;
  RouteAlgo algo = RouteAlgo::face1;
  std::size_t pair_cap = 0;    // 0 = every ordered reachable pair
};

struct RatioSample {
  std::uint64_t instance_seed = 0;
  std::int64_t s_id = -1, t_id = -1;
  RouteOutcome outcome = RouteOutcome::budget_exceeded;
  std::size_t trace_hops = 0;
  double trace_length = 0.0;
  double opt_length = 0.0;
  double ratio = 0.0;  // meaningful only when delivered
};

struct MeasureReport {
  MeasureParams params;
  std::vector<RatioSample> samples;
  std::size_t delivered = 0;
  std::size_t undelivered = 0;  // counted separately, never mixed into ratios
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double p50 = 0.0, p90 = 0.0, p99 = 0.0;
};

namespace detail {

inline double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double idx = p * double(sorted.size() - 1);
  const std::size_t lo = std::size_t(idx);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = idx - double(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace detail

inline MeasureReport measure_routing_ratio(const MeasureParams& prm) {
  MeasureReport rep;
  rep.params = prm;
  std::vector<double> ratios;
  for (std::size_t k = 0; k < prm.trials; ++k) {
    GenParams gp;
    gp.n = prm.n;
    gp.density = prm.density;
    gp.seed = prm.seed + k;
    const Instance inst = generate_random_instance(gp);
    const GeomGraph base = build_graph_of_kind(inst, routing_base_kind(prm.algo, prm.graph));
    std::size_t taken = 0;
    for (std::size_t si = 0; si < inst.size(); ++si) {
      const DijkstraResult sp = dijkstra(inst, base, std::int32_t(si));
      for (std::size_t ti = 0; ti < inst.size(); ++ti) {
        if (si == ti || !sp.reached(std::int32_t(ti))) continue;
        if (prm.pair_cap != 0 && taken >= prm.pair_cap) break;
        ++taken;
        RatioSample smp;
        smp.instance_seed = gp.seed;
        smp.s_id = inst.id_of(si);
        smp.t_id = inst.id_of(ti);
        smp.opt_length = double(sp.dist[ti]);
        const RouteTrace tr = route(inst, base, prm.algo, smp.s_id, smp.t_id);
        smp.outcome = tr.outcome;
        smp.trace_hops = tr.steps.size();
        smp.trace_length = tr.total_length;
        if (tr.delivered() && smp.opt_length > 0) {
          smp.ratio = smp.trace_length / smp.opt_length;
          ratios.push_back(smp.ratio);
          ++rep.delivered;
        } else {
          ++rep.undelivered;
        }
        rep.samples.push_back(std::move(smp));
      }
      if (prm.pair_cap != 0 && taken >= prm.pair_cap) break;
    }
  }
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    rep.max_ratio = ratios.back();
    double sum = 0.0;
    for (double r : ratios) sum += r;
    rep.mean_ratio = sum / double(ratios.size());
    rep.p50 = detail::percentile(ratios, 0.50);
    rep.p90 = detail::percentile(ratios, 0.90);
    rep.p99 = detail::percentile(ratios, 0.99);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Non-competitiveness probe: on the stretched two-column family the face
// walker is herded through every corridor while the graph has a short
// boundary climb, so its ratio must keep growing as rows are added.

struct GrowthSample {
  std::size_t n = 0;
  double ratio = 0.0;
  bool delivered = false;
};

struct GrowthReport {
  std::vector<GrowthSample> samples;
  bool all_delivered = false;
  bool strictly_increasing = false;
};

inline GrowthReport measure_face_walk_growth(const std::vector<std::size_t>& sizes,
                                             const Rational& x, const Rational& eps,
                                             std::uint64_t seed = 0) {
  GrowthReport rep;
  rep.all_delivered = true;
  rep.strictly_increasing = true;
  double prev = 0.0;
  for (std::size_t n : sizes) {
    LowerBoundParams prm;
    prm.n = n;
    prm.x = x;
    prm.eps = eps;
    prm.seed = seed;
    const LowerBoundInstance lb = gen_lower_bound(prm);
    const GeomGraph g = build_visibility_graph(lb.inst);
    const RouteTrace tr = route(lb.inst, g, RouteAlgo::face1, lb.s_id, lb.t_id);
    GrowthSample smp;
    smp.n = n;
    smp.delivered = tr.delivered();
    if (!smp.delivered) rep.all_delivered = false;
    const auto s = std::int32_t(lb.inst.index_of(lb.s_id));
    const auto t = std::int32_t(lb.inst.index_of(lb.t_id));
    const DijkstraResult sp = dijkstra(lb.inst, g, s);
    if (sp.reached(t) && sp.dist[std::size_t(t)] > 0)
      smp.ratio = tr.total_length / double(sp.dist[std::size_t(t)]);
    if (smp.ratio <= prev) rep.strictly_increasing = false;
    prev = smp.ratio;
    rep.samples.push_back(smp);
  }
  return rep;
}

}  // namespace visroute
