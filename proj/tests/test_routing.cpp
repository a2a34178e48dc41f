#include "visroute/routing.hpp"

#include "visroute/random_gen.hpp"
#include "visroute/theta_graphs.hpp"
#include "visroute/triangulation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace visroute;

namespace {

Point pt(std::int64_t id, const char* x, const char* y) {
  return Point{id, parse_rational(x), parse_rational(y)};
}

// A wall between source 0 and target 1 that empties the cone of 0 facing 1:
// greedy cone stepping has nowhere to go, face walking does.
Instance walled_pair_instance() {
  std::vector<Point> pts = {pt(0, "0", "0"), pt(1, "0", "3"), pt(2, "-2", "1"),
                            pt(3, "2", "6/5")};
  return Instance(pts, {{2, 3}}, Validation::full);
}

std::set<std::pair<std::int64_t, std::int64_t>> id_edge_set(const Instance& inst,
                                                            const GeomGraph& g) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (auto [a, b] : g.edges()) {
    const auto ia = inst.id_of(a), ib = inst.id_of(b);
    out.emplace(std::min(ia, ib), std::max(ia, ib));
  }
  return out;
}

void check_trace_edges_in(const Instance& inst, const RouteTrace& tr, const GeomGraph& g) {
  const auto allowed = id_edge_set(inst, g);
  for (const auto& st : tr.steps) {
    const auto key = std::make_pair(std::min(st.from, st.to), std::max(st.from, st.to));
    INFO("step " << st.from << " -> " << st.to);
    CHECK(allowed.count(key) == 1);
  }
}

}  // namespace

TEST_CASE("cone stepping reports stuck at an emptied cone") {
  const Instance inst = walled_pair_instance();
  const GeomGraph half = build_constrained_half_theta6(inst);
  const RouteTrace tr = route(inst, half, RouteAlgo::theta, 0, 1);
  CHECK(tr.outcome == RouteOutcome::stuck);
  CHECK(tr.steps.empty());
  CHECK_FALSE(tr.note.empty());
}

TEST_CASE("face walking delivers across the wall") {
  const Instance inst = walled_pair_instance();
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  for (RouteAlgo algo : {RouteAlgo::face1, RouteAlgo::face2}) {
    const RouteTrace tr = route(inst, vis, algo, 0, 1);
    INFO(route_algo_name(algo));
    REQUIRE(tr.outcome == RouteOutcome::delivered);
    CHECK(tr.edge_traversals == tr.steps.size());
    CHECK(tr.total_length > 0.0);
    // every traversed edge belongs to the plane graph both walkers navigate
    check_trace_edges_in(inst, tr, half);
    // memory stays within the advertised word budgets
    const std::size_t cap = algo == RouteAlgo::face1 ? 4 : 3;
    for (const auto& st : tr.steps) CHECK(st.memory.size() <= cap);
  }
}

TEST_CASE("delivery to self takes zero steps") {
  const Instance inst = walled_pair_instance();
  const GeomGraph vis = build_visibility_graph(inst);
  const RouteTrace tr = route(inst, vis, RouteAlgo::face1, 2, 2);
  CHECK(tr.outcome == RouteOutcome::delivered);
  CHECK(tr.steps.empty());
  CHECK(tr.total_length == 0.0);
}

TEST_CASE("a full silent face loop is reported as unreachable") {
  // Two far-apart triangles; the target's triangle is in another component,
  // so the source face is walked once end to end without any crossing.
  std::vector<Point> pts = {pt(0, "0", "0"),    pt(1, "2", "1/3"),  pt(2, "1", "1"),
                            pt(3, "10", "1/7"), pt(4, "12", "1/2"), pt(5, "11", "6/5")};
  const Instance inst(pts, {}, Validation::structural);
  GeomGraph base(GraphKind::custom, inst.size());
  base.add_edge(0, 1);
  base.add_edge(0, 2);
  base.add_edge(1, 2);
  base.add_edge(3, 4);
  base.add_edge(3, 5);
  base.add_edge(4, 5);
  base.finish();

  const RouteTrace tr =
      run_router(inst, base, 0, 3,
                 make_face_stepper(FaceMode::scan_then_walk, plane_filter_all()), "face1");
  CHECK(tr.outcome == RouteOutcome::unreachable);
}

TEST_CASE("the step budget cuts off a walk") {
  const Instance inst = walled_pair_instance();
  const GeomGraph vis = build_visibility_graph(inst);
  RouterConfig cfg;
  cfg.budget = 1;
  const RouteTrace tr = route(inst, vis, RouteAlgo::face1, 0, 1, cfg);
  CHECK(tr.outcome == RouteOutcome::budget_exceeded);
  CHECK(tr.steps.size() == 1);
}

TEST_CASE("face walkers deliver every ordered pair of a random instance") {
  GenParams gp;
  gp.n = 12;
  gp.density = 0.4;
  gp.seed = 5;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);

  for (RouteAlgo algo : {RouteAlgo::face1, RouteAlgo::face2}) {
    for (std::size_t s = 0; s < inst.size(); ++s) {
      for (std::size_t t = 0; t < inst.size(); ++t) {
        if (s == t) continue;
        const RouteTrace tr = route(inst, vis, algo, inst.id_of(s), inst.id_of(t));
        INFO(route_algo_name(algo) << " " << inst.id_of(s) << " -> " << inst.id_of(t));
        REQUIRE(tr.outcome == RouteOutcome::delivered);
        check_trace_edges_in(inst, tr, half);
      }
    }
  }
}

TEST_CASE("cone stepping either delivers or reports stuck, never worse") {
  GenParams gp;
  gp.n = 12;
  gp.density = 0.4;
  gp.seed = 5;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph half = build_constrained_half_theta6(inst);
  std::size_t delivered = 0;
  for (std::size_t s = 0; s < inst.size(); ++s)
    for (std::size_t t = 0; t < inst.size(); ++t) {
      if (s == t) continue;
      const RouteTrace tr = route(inst, half, RouteAlgo::theta, inst.id_of(s), inst.id_of(t));
      CHECK((tr.outcome == RouteOutcome::delivered || tr.outcome == RouteOutcome::stuck));
      if (tr.delivered()) {
        check_trace_edges_in(inst, tr, half);
        for (const auto& st : tr.steps) CHECK(st.memory.empty());
        ++delivered;
      }
    }
  CHECK(delivered > 0);
}

TEST_CASE("triangle walking stays on triangulation edges") {
  GenParams gp;
  gp.n = 14;
  gp.density = 0.3;
  gp.seed = 8;
  const Instance inst = generate_random_instance(gp);
  const GeomGraph cdt = build_cdt_graph(inst);
  for (std::size_t s : {std::size_t(0), std::size_t(3)}) {
    for (std::size_t t = 0; t < inst.size(); ++t) {
      if (s == t) continue;
      const RouteTrace tr = route(inst, cdt, RouteAlgo::face1_on_h, inst.id_of(s), inst.id_of(t));
      INFO(inst.id_of(s) << " -> " << inst.id_of(t));
      REQUIRE(tr.outcome == RouteOutcome::delivered);
      check_trace_edges_in(inst, tr, cdt);
    }
  }
}

TEST_CASE("traces serialize with their memory words") {
  const Instance inst = walled_pair_instance();
  const GeomGraph vis = build_visibility_graph(inst);
  const RouteTrace tr = route(inst, vis, RouteAlgo::face1, 0, 1);
  REQUIRE(tr.delivered());
  const auto j = trace_to_json(tr);
  CHECK(j["algo"] == "face1");
  CHECK(j["delivered"] == true);
  CHECK(j["steps"].size() == tr.steps.size());
  CHECK(j["edge_traversals"].get<std::size_t>() == tr.edge_traversals);
  for (const auto& step : j["steps"])
    for (const auto& word : step["memory"])
      CHECK((word["kind"] == "id" || word["kind"] == "point"));
}
