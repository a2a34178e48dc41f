#pragma once

// Deterministic SVG rendering of instances, graphs, paths and walk traces.
// Output depends only on the inputs: coordinates are printed with a fixed
// %.6f format and layers are emitted in the order they were added, so two
// runs over the same data produce byte-identical files.

#include "visroute/geom_graph.hpp"
#include "visroute/instance.hpp"
#include "visroute/routing.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace visroute {

namespace detail {

inline std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

class SvgScene {
 public:
  explicit SvgScene(const Instance& inst) : inst_(&inst) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const double x = to_double(inst.point(i).x), y = to_double(inst.point(i).y);
      if (i == 0 || x < min_x_) min_x_ = x;
      if (i == 0 || x > max_x_) max_x_ = x;
      if (i == 0 || y < min_y_) min_y_ = y;
      if (i == 0 || y > max_y_) max_y_ = y;
    }
    const double span = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-9});
    scale_ = 792.0 / span;  // longest side maps to 840px minus margins
  }

  void add_edges(const GeomGraph& g, const std::string& layer = "edges",
                 const std::string& stroke = "#222222", double width = 1.0,
                 const std::string& dash = "") {
    open_layer(layer);
    for (auto [a, b] : g.edges())
      line(pt(a), pt(b), stroke, width, dash);
    close_layer();
  }

  void add_constraints(const std::string& stroke = "#cc2222", double width = 3.0) {
    open_layer("constraints");
    for (auto [a, b] : inst_->constraints()) line(pt(a), pt(b), stroke, width, "");
    close_layer();
  }

  void add_path(const Path& p, const std::string& layer, const std::string& stroke,
                double width, const std::string& dash) {
    open_layer(layer);
    for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
      line(pt(std::size_t(p.verts[i])), pt(std::size_t(p.verts[i + 1])), stroke, width, dash);
    close_layer();
  }

  void add_trace(const RouteTrace& tr, const std::string& stroke = "#2a7f2a",
                 double width = 1.6) {
    open_layer("trace");
    for (const auto& st : tr.steps) {
      const auto a = inst_->index_of(st.from), b = inst_->index_of(st.to);
      line(pt(a), pt(b), stroke, width, "6,3");
    }
    close_layer();
  }

  void add_segment(std::size_t a, std::size_t b, const std::string& layer = "query",
                   const std::string& stroke = "#7744bb", double width = 1.2) {
    open_layer(layer);
    line(pt(a), pt(b), stroke, width, "2,4");
    close_layer();
  }

  void add_vertices(bool with_ids = true, double radius = 3.0) {
    open_layer("vertices");
    for (std::size_t i = 0; i < inst_->size(); ++i) {
      const auto [x, y] = pt(i);
      body_ += "<circle cx=\"" + detail::fmt6(x) + "\" cy=\"" + detail::fmt6(y) + "\" r=\"" +
               detail::fmt6(radius) + "\" fill=\"#333333\"/>\n";
      if (with_ids)
        body_ += "<text x=\"" + detail::fmt6(x + 5.0) + "\" y=\"" + detail::fmt6(y - 5.0) +
                 "\" font-size=\"11\" font-family=\"monospace\" fill=\"#555555\">" +
                 std::to_string(inst_->id_of(i)) + "</text>\n";
    }
    close_layer();
  }

  std::string finish() const {
    const double span_x = max_x_ - min_x_, span_y = max_y_ - min_y_;
    const double margin = 24.0;
    const double w = scale_ * (span_x > 0 ? span_x : 1.0) + 2 * margin;
    const double h = scale_ * (span_y > 0 ? span_y : 1.0) + 2 * margin;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      detail::fmt6(w) + " " + detail::fmt6(h) + "\" width=\"" + detail::fmt6(w) +
                      "\" height=\"" + detail::fmt6(h) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + detail::fmt6(w) + "\" height=\"" + detail::fmt6(h) +
           "\" fill=\"#fcfcf8\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  std::pair<double, double> pt(std::size_t i) const {
    const double margin = 24.0;
    const double x = to_double(inst_->point(i).x), y = to_double(inst_->point(i).y);
    const double span_y = max_y_ - min_y_;
    // Flip y: geometry is y-up, SVG is y-down.
    return {margin + scale_ * (x - min_x_), margin + scale_ * (span_y - (y - min_y_))};
  }

  void open_layer(const std::string& name) { body_ += "<g id=\"layer-" + name + "\">\n"; }
  void close_layer() { body_ += "</g>\n"; }

  void line(std::pair<double, double> a, std::pair<double, double> b, const std::string& stroke,
            double width, const std::string& dash) {
    body_ += "<line x1=\"" + detail::fmt6(a.first) + "\" y1=\"" + detail::fmt6(a.second) +
             "\" x2=\"" + detail::fmt6(b.first) + "\" y2=\"" + detail::fmt6(b.second) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"" + detail::fmt6(width) + "\"";
    if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
    body_ += "/>\n";
  }

  const Instance* inst_;
  double min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  double scale_ = 60.0;
  std::string body_;
};

}  // namespace visroute
