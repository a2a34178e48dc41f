// Command-line front end.  Subcommands cover the whole pipeline: generate
// instances, build graphs, run the routing walkers, verify structural
// invariants, reproduce the lower-bound family, measure routing quality and
// render SVG pictures.
//
// Conventions: machine output goes to --out (or stdout), human commentary to
// stderr.  Identical command lines with identical seeds produce byte-identical
// output.  Exit codes: 0 success/delivered, 1 error or failed verification,
// 2 walker stuck, 3 target unreachable.

#include <CLI11.hpp>

#include "visroute/crossed_subgraph.hpp"
#include "visroute/instance_io.hpp"
#include "visroute/local_ident.hpp"
#include "visroute/lower_bound.hpp"
#include "visroute/measure.hpp"
#include "visroute/random_gen.hpp"
#include "visroute/routing.hpp"
#include "visroute/shortest_path.hpp"
#include "visroute/svg_render.hpp"
#include "visroute/theta_graphs.hpp"
#include "visroute/triangulation.hpp"
#include "visroute/visibility.hpp"

#include <atomic>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace visroute;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

GraphKind parse_graph_kind(const std::string& s) {
  if (s == "vis") return GraphKind::visibility;
  if (s == "theta6") return GraphKind::theta;
  if (s == "half-theta6") return GraphKind::half_theta6;
  if (s == "cdt") return GraphKind::cdt;
  throw CLI::ValidationError("--graph", "expected one of: vis, theta6, half-theta6, cdt");
}

RouteAlgo parse_algo(const std::string& s) {
  if (s == "theta") return RouteAlgo::theta;
  if (s == "face1") return RouteAlgo::face1;
  if (s == "face2") return RouteAlgo::face2;
  if (s == "face1-on-h") return RouteAlgo::face1_on_h;
  throw CLI::ValidationError("--algo", "expected one of: theta, face1, face2, face1-on-h");
}

std::string graph_as_text(const Instance& inst, const GeomGraph& g) {
  std::string out = "graph " + std::string(graph_kind_name(g.kind)) + "\n";
  out += "n " + std::to_string(inst.size()) + "\n";
  for (auto [a, b] : g.edges()) {
    const auto ia = inst.id_of(std::size_t(a)), ib = inst.id_of(std::size_t(b));
    out += "edge " + std::to_string(std::min(ia, ib)) + " " + std::to_string(std::max(ia, ib)) +
           "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_gen(std::size_t n, double density, std::uint64_t seed, const std::string& format,
            const std::string& out_path) {
  GenParams prm;
  prm.n = n;
  prm.density = density;
  prm.seed = seed;
  const Instance inst = generate_random_instance(prm);
  std::cerr << "generated instance: " << inst.size() << " vertices, "
            << inst.constraints().size() << " constraints (seed " << seed << ")\n";
  emit(out_path, format == "json" ? serialize_instance_json(inst) : serialize_instance_text(inst));
  return 0;
}

int cmd_build(const std::string& in_path, const std::string& graph, const std::string& format,
              const std::string& out_path) {
  const Instance inst = load_instance(in_path);
  const GeomGraph g = build_graph_of_kind(inst, parse_graph_kind(graph));
  std::cerr << "built " << graph_kind_name(g.kind) << ": " << g.edge_count() << " edges over "
            << inst.size() << " vertices\n";
  emit(out_path, format == "json" ? serialize_graph_json(inst, g) : graph_as_text(inst, g));
  return 0;
}

int cmd_route(const std::string& in_path, std::string graph, const std::string& algo_name,
              std::int64_t s, std::int64_t t, const std::string& format,
              const std::string& out_path) {
  const Instance inst = load_instance(in_path);
  const RouteAlgo algo = parse_algo(algo_name);
  const GraphKind requested =
      graph.empty() ? GraphKind::half_theta6 : parse_graph_kind(graph);
  const GeomGraph base = build_graph_of_kind(inst, routing_base_kind(algo, requested));
  const RouteTrace tr = route(inst, base, algo, s, t);
  std::cerr << tr.algo << " on " << graph_kind_name(base.kind) << ": "
            << route_outcome_name(tr.outcome) << " after " << tr.steps.size() << " steps";
  if (tr.delivered()) std::cerr << ", length " << fmt_double(tr.total_length);
  if (!tr.note.empty()) std::cerr << " (" << tr.note << ")";
  std::cerr << "\n";

  if (format == "json") {
    emit(out_path, trace_to_json(tr).dump(2) + "\n");
  } else {
    std::string text;
    text += "algo " + tr.algo + "\n";
    text += "graph " + std::string(graph_kind_name(base.kind)) + "\n";
    text += "s " + std::to_string(tr.s_id) + "\n";
    text += "t " + std::to_string(tr.t_id) + "\n";
    text += "outcome " + std::string(route_outcome_name(tr.outcome)) + "\n";
    text += "steps " + std::to_string(tr.steps.size()) + "\n";
    text += "length " + fmt_double(tr.total_length) + "\n";
    for (const auto& st : tr.steps)
      text += "step " + std::to_string(st.from) + " " + std::to_string(st.to) + "\n";
    emit(out_path, text);
  }
  switch (tr.outcome) {
    case RouteOutcome::delivered: return 0;
    case RouteOutcome::stuck: return 2;
    case RouteOutcome::unreachable: return 3;
    case RouteOutcome::budget_exceeded: return 1;
  }
  return 1;
}

int cmd_verify(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
  nlohmann::ordered_json rep;
  bool all_ok = true;
  Instance inst;
  try {
    inst = load_instance(in_path, Validation::full);
    rep["instance"] = "ok";
  } catch (const ValidationError& e) {
    rep["instance"] = std::string("FAIL: ") + e.what();
    emit(out_path, format == "json" ? rep.dump(2) + "\n"
                                    : "instance FAIL: " + std::string(e.what()) + "\n");
    std::cerr << "instance validation failed\n";
    return 1;
  }

  const Triangulation tri = build_cdt(inst);
  const TriangulationReport tr = validate_triangulation(inst, tri);
  rep["triangulation"] = tr.ok ? "ok" : ("FAIL: " + tr.issues.front());
  all_ok = all_ok && tr.ok;

  const GeomGraph vis = build_visibility_graph(inst);
  const GeomGraph half = build_constrained_half_theta6(inst, vis);
  const std::string planar = find_planarity_violation(inst, half);
  rep["half_theta6_planar"] = planar.empty() ? "ok" : ("FAIL: " + planar);
  all_ok = all_ok && planar.empty();

  // Every vertex, given only its visibility packet, must identify exactly the
  // half-theta edges the global construction gives it.
  std::size_t mismatches = 0;
  for (std::size_t u = 0; u < inst.size(); ++u) {
    const Neighborhood nb = make_neighborhood(inst, vis, u);
    std::set<std::int64_t> local;
    for (auto [self, w] : local_half_theta6_edges(nb)) local.insert(w);
    std::set<std::int64_t> global;
    for (std::int32_t v : half.adj[u]) global.insert(inst.id_of(std::size_t(v)));
    if (local != global) ++mismatches;
  }
  rep["local_global_agreement"] =
      mismatches == 0 ? "ok" : ("FAIL: " + std::to_string(mismatches) + " vertices disagree");
  all_ok = all_ok && mismatches == 0;

  if (format == "json") {
    emit(out_path, rep.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& [k, v] : rep.items()) text += k + " " + v.get<std::string>() + "\n";
    emit(out_path, text);
  }
  std::cerr << (all_ok ? "all checks passed\n" : "verification FAILED\n");
  return all_ok ? 0 : 1;
}

int cmd_lowerbound(std::size_t n, const std::string& x_str, const std::string& eps_str,
                   std::size_t trials, std::uint64_t seed, const std::string& format,
                   const std::string& out_path) {
  LowerBoundParams prm;
  prm.n = n;
  prm.x = parse_rational(x_str);
  prm.eps = parse_rational(eps_str);
  prm.seed = seed;
  const LowerBoundReport rep = verify_lower_bound(prm);

  nlohmann::ordered_json j;
  j["n"] = n;
  j["x"] = x_str;
  j["eps"] = eps_str;
  j["seed"] = seed;
  j["closed_form"] = format_rational(rep.closed_form);
  j["closed_form_approx"] = to_double(rep.closed_form);
  j["ratio_lo"] = to_double(rep.ratio.lo);
  j["ratio_hi"] = to_double(rep.ratio.hi);
  j["pi_g_lo"] = to_double(rep.pi_g.lo);
  j["pi_h_lo"] = to_double(rep.pi_h.lo);
  j["relative_tolerance"] = to_double(rep.tolerance);
  j["within_tolerance"] = rep.within_tolerance;
  j["boundary_clear"] = rep.boundary_clear;
  bool ok = rep.ok();
  if (trials > 0) {
    const EveryTriangulationReport et = verify_every_triangulation_bound(prm, trials);
    j["triangulations_checked"] = et.cases;
    j["triangulation_boundary_violations"] = et.boundary_violations;
    j["triangulation_ratio_violations"] = et.ratio_violations;
    j["min_ratio_over_triangulations"] = to_double(et.min_ratio_lo);
    ok = ok && et.ok();
  }
  j["ok"] = ok;

  if (format == "json") {
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::string text;
    text += "closed_form " + format_rational(rep.closed_form) + " ~ " +
            fmt_double(to_double(rep.closed_form)) + "\n";
    text += "ratio [" + fmt_double(to_double(rep.ratio.lo)) + ", " +
            fmt_double(to_double(rep.ratio.hi)) + "]\n";
    text += "within_tolerance " + std::string(rep.within_tolerance ? "yes" : "no") + "\n";
    text += "boundary_clear " + std::string(rep.boundary_clear ? "yes" : "no") + "\n";
    if (trials > 0) {
      text += "triangulations_checked " + std::to_string(j["triangulations_checked"].get<std::size_t>()) + "\n";
      text += "min_ratio_over_triangulations " +
              fmt_double(j["min_ratio_over_triangulations"].get<double>()) + "\n";
    }
    text += "ok " + std::string(ok ? "yes" : "no") + "\n";
    emit(out_path, text);
  }
  std::cerr << "lower-bound family n=" << n << ": ratio within ["
            << fmt_double(to_double(rep.ratio.lo)) << ", " << fmt_double(to_double(rep.ratio.hi))
            << "], target " << fmt_double(to_double(rep.closed_form)) << "\n";
  return ok ? 0 : 1;
}

int cmd_measure(std::size_t n, double density, std::size_t trials, std::uint64_t seed,
                const std::string& graph, const std::string& algo_name, std::size_t jobs,
                const std::string& format, const std::string& out_path) {
  const RouteAlgo algo = parse_algo(algo_name);
  const GraphKind kind = routing_base_kind(algo, parse_graph_kind(graph));

  struct Row {
    std::uint64_t inst_seed;
    std::size_t n, cons;
    std::int64_t s, t;
    bool delivered;
    double trace_len, pi_g, pi_h, pi_hp;
  };
  std::vector<std::vector<Row>> per_instance(trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= trials) return;
      GenParams gp;
      gp.n = n;
      gp.density = density;
      gp.seed = seed + k;
      const Instance inst = generate_random_instance(gp);
      const GeomGraph base = build_graph_of_kind(inst, kind);
      const Triangulation tri = build_cdt(inst);
      auto& rows = per_instance[k];
      for (std::size_t si = 0; si < inst.size(); ++si) {
        const DijkstraResult sp = dijkstra(inst, base, std::int32_t(si));
        for (std::size_t ti = 0; ti < inst.size(); ++ti) {
          if (si == ti || !sp.reached(std::int32_t(ti))) continue;
          Row r;
          r.inst_seed = gp.seed;
          r.n = inst.size();
          r.cons = inst.constraints().size();
          r.s = inst.id_of(si);
          r.t = inst.id_of(ti);
          r.pi_g = double(sp.dist[ti]);
          const CrossedSubgraph cs =
              extract_crossed_subgraph(inst, tri, std::int32_t(si), std::int32_t(ti));
          const DenseCrossedSubgraph dense = build_dense_crossed_subgraph(inst, cs);
          const DijkstraResult sph = dijkstra(inst, cs.h, std::int32_t(si));
          const DijkstraResult sphp = dijkstra(inst, dense.g, std::int32_t(si));
          r.pi_h = sph.reached(std::int32_t(ti)) ? double(sph.dist[ti]) : -1.0;
          r.pi_hp = sphp.reached(std::int32_t(ti)) ? double(sphp.dist[ti]) : -1.0;
          const RouteTrace tr = route(inst, base, algo, r.s, r.t);
          r.delivered = tr.delivered();
          r.trace_len = tr.total_length;
          rows.push_back(r);
        }
      }
    }
  };
  const std::size_t nthreads = std::max<std::size_t>(1, std::min(jobs, trials));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i + 1 < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t delivered = 0, undelivered = 0;
  std::vector<double> ratios;
  std::string csv =
      "instance_seed,n,constraints,algo,s,t,delivered,trace_len,pi_g,pi_h,pi_hprime,"
      "ratio_g,ratio_h,ratio_hp\n";
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& rows : per_instance) {
    for (const Row& r : rows) {
      const double rg = (r.delivered && r.pi_g > 0) ? r.trace_len / r.pi_g : -1.0;
      const double rh = (r.delivered && r.pi_h > 0) ? r.trace_len / r.pi_h : -1.0;
      const double rhp = (r.delivered && r.pi_hp > 0) ? r.trace_len / r.pi_hp : -1.0;
      if (r.delivered) {
        ++delivered;
        if (rg > 0) ratios.push_back(rg);
      } else {
        ++undelivered;
      }
      csv += std::to_string(r.inst_seed) + "," + std::to_string(r.n) + "," +
             std::to_string(r.cons) + "," + algo_name + "," + std::to_string(r.s) + "," +
             std::to_string(r.t) + "," + (r.delivered ? "1" : "0") + "," +
             fmt_double(r.trace_len) + "," + fmt_double(r.pi_g) + "," + fmt_double(r.pi_h) +
             "," + fmt_double(r.pi_hp) + "," + fmt_double(rg) + "," + fmt_double(rh) + "," +
             fmt_double(rhp) + "\n";
      if (format == "json") {
        nlohmann::ordered_json row;
        row["instance_seed"] = r.inst_seed;
        row["s"] = r.s;
        row["t"] = r.t;
        row["delivered"] = r.delivered;
        row["trace_len"] = r.trace_len;
        row["pi_g"] = r.pi_g;
        row["pi_h"] = r.pi_h;
        row["pi_hprime"] = r.pi_hp;
        row["ratio_g"] = rg;
        rows_json.push_back(row);
      }
    }
  }
  std::sort(ratios.begin(), ratios.end());
  auto pct = [&](double p) {
    return ratios.empty() ? 0.0 : visroute::detail::percentile(ratios, p);
  };
  const double maxr = ratios.empty() ? 0.0 : ratios.back();
  double mean = 0.0;
  for (double r : ratios) mean += r;
  if (!ratios.empty()) mean /= double(ratios.size());

  if (format == "json") {
    nlohmann::ordered_json j;
    j["params"] = {{"n", n},         {"density", density}, {"trials", trials},
                   {"seed", seed},   {"graph", graph},     {"algo", algo_name}};
    j["delivered"] = delivered;
    j["undelivered"] = undelivered;
    j["max_ratio"] = maxr;
    j["mean_ratio"] = mean;
    j["p50"] = pct(0.50);
    j["p90"] = pct(0.90);
    j["p99"] = pct(0.99);
    j["rows"] = rows_json;
    emit(out_path, j.dump(2) + "\n");
  } else {
    emit(out_path, csv);
  }
  std::cerr << "measured " << (delivered + undelivered) << " pairs: " << delivered
            << " delivered, " << undelivered << " not; max ratio " << fmt_double(maxr)
            << ", mean " << fmt_double(mean) << "\n";
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& graph,
               const std::string& algo_name, std::int64_t s, std::int64_t t, bool have_pair,
               const std::string& out_path) {
  const Instance inst = load_instance(in_path);
  const GeomGraph base = build_graph_of_kind(inst, parse_graph_kind(graph));
  SvgScene scene(inst);
  scene.add_edges(base);
  scene.add_constraints();
  if (have_pair) {
    const auto si = std::int32_t(inst.index_of(s)), ti = std::int32_t(inst.index_of(t));
    scene.add_segment(std::size_t(si), std::size_t(ti));
    const Path pg = shortest_path(inst, base, si, ti);
    if (!pg.empty()) scene.add_path(pg, "shortest-graph", "#2244cc", 2.0, "2,3");
    const Triangulation tri = build_cdt(inst);
    const CrossedSubgraph cs = extract_crossed_subgraph(inst, tri, si, ti);
    const Path ph = shortest_path(inst, cs.h, si, ti);
    if (!ph.empty()) scene.add_path(ph, "shortest-crossed", "#dd8800", 2.0, "8,3,2,3");
    if (!algo_name.empty()) {
      const RouteAlgo ra = parse_algo(algo_name);
      const GraphKind bk = routing_base_kind(ra, base.kind);
      const GeomGraph walk_base = bk == base.kind ? base : build_graph_of_kind(inst, bk);
      const RouteTrace tr = route(inst, walk_base, ra, s, t);
      scene.add_trace(tr);
      std::cerr << "trace: " << route_outcome_name(tr.outcome) << " in " << tr.steps.size()
                << " steps\n";
    }
  }
  scene.add_vertices();
  emit(out_path, scene.finish());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained-visibility routing workbench"};
  app.require_subcommand(1);

  std::size_t n = 16, trials = 20, jobs = 1;
  double density = 0.3;
  std::uint64_t seed = 0;
  std::string in_path, out_path, format = "text", graph, algo;
  std::string x_str = "1000", eps_str = "1/1000";
  std::int64_t s = -1, t = -1;

  auto* c_gen = app.add_subcommand("gen", "generate a random instance");
  c_gen->add_option("--n", n, "vertex count")->default_val(16);
  c_gen->add_option("--density", density, "fraction of candidate constraints kept");
  c_gen->add_option("--seed", seed, "random seed");
  c_gen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_gen->add_option("--out", out_path, "output path (default stdout)");

  auto* c_build = app.add_subcommand("build", "build a graph over an instance");
  c_build->add_option("--in", in_path, "instance file")->required();
  c_build->add_option("--graph", graph, "vis | theta6 | half-theta6 | cdt")
      ->default_val("half-theta6");
  c_build->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_build->add_option("--out", out_path);

  auto* c_route = app.add_subcommand("route", "run a routing walker");
  c_route->add_option("--in", in_path, "instance file")->required();
  c_route->add_option("--graph", graph, "base graph (default: algo-appropriate)");
  c_route->add_option("--algo", algo, "theta | face1 | face2 | face1-on-h")->required();
  c_route->add_option("--s", s, "source vertex id")->required();
  c_route->add_option("--t", t, "target vertex id")->required();
  c_route->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_route->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "structural checks over an instance");
  c_verify->add_option("--in", in_path, "instance file")->required();
  c_verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_verify->add_option("--out", out_path);

  auto* c_lb = app.add_subcommand("lowerbound", "reproduce the two-column ratio family");
  c_lb->add_option("--n", n, "vertex count (multiple of 4)")->default_val(8);
  c_lb->add_option("--x", x_str, "horizontal half-stretch (rational)");
  c_lb->add_option("--eps", eps_str, "row shift shortfall (rational)");
  c_lb->add_option("--trials", trials, "extra random triangulations to check")->default_val(0);
  c_lb->add_option("--seed", seed, "jitter seed");
  c_lb->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_lb->add_option("--out", out_path);

  auto* c_measure = app.add_subcommand("measure", "routing-quality statistics");
  c_measure->add_option("--n", n)->default_val(16);
  c_measure->add_option("--density", density);
  c_measure->add_option("--trials", trials, "number of random instances")->default_val(20);
  c_measure->add_option("--seed", seed);
  c_measure->add_option("--graph", graph)->default_val("half-theta6");
  c_measure->add_option("--algo", algo)->default_val("face1");
  c_measure->add_option("--jobs", jobs, "worker threads")->default_val(1);
  c_measure->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_measure->add_option("--out", out_path);

  auto* c_render = app.add_subcommand("render", "draw an instance as SVG");
  c_render->add_option("--in", in_path, "instance file")->required();
  c_render->add_option("--graph", graph)->default_val("half-theta6");
  c_render->add_option("--algo", algo, "overlay a walk trace");
  c_render->add_option("--s", s, "source vertex id");
  c_render->add_option("--t", t, "target vertex id");
  c_render->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_gen->parsed()) return cmd_gen(n, density, seed, format, out_path);
    if (c_build->parsed()) return cmd_build(in_path, graph, format, out_path);
    if (c_route->parsed()) return cmd_route(in_path, graph, algo, s, t, format, out_path);
    if (c_verify->parsed()) return cmd_verify(in_path, format, out_path);
    if (c_lb->parsed())
      return cmd_lowerbound(n, x_str, eps_str, trials, seed, format, out_path);
    if (c_measure->parsed())
      return cmd_measure(n, density, trials, seed, graph, algo, jobs, format, out_path);
    if (c_render->parsed()) {
      const bool have_pair = c_render->count("--s") && c_render->count("--t");
      return cmd_render(in_path, graph, algo, s, t, have_pair, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
