#pragma once

// Problem instances: a set of labeled points with exact rational coordinates
// plus a set of constraints (non-crossing segments between points, always
// traversable edges and simultaneously visibility blockers).
//
// An Instance canonicalizes on construction: points sorted by id, constraints
// stored as (low, high) id pairs and sorted.  It also precomputes a
// denominator-cleared integer copy of the coordinates; all predicates used in
// graph construction are invariant under the uniform scaling, and integer
// arithmetic is more than an order of magnitude faster than normalized
// rational arithmetic.

#include "visroute/general_position.hpp"
#include "visroute/predicates.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace visroute {

struct Point {
  std::int64_t id = 0;
  Rational x, y;

  Vec2R pos() const { return {x, y}; }
};

struct ValidationError : std::runtime_error {
  PositionReport report;
  explicit ValidationError(const std::string& what, PositionReport rep = {})
      : std::runtime_error(what), report(std::move(rep)) {}
};

enum class Validation {
  structural,  // ids, duplicates, constraint sanity
  full,        // structural + general position
};

class Instance {
 public:
  Instance() = default;

  Instance(std::vector<Point> points, std::vector<std::pair<std::int64_t, std::int64_t>> constraints,
           Validation level = Validation::full, int cone_count = 6) {
    build(std::move(points), std::move(constraints), level, cone_count);
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::pair<std::int32_t, std::int32_t>>& constraints() const {
    return constraints_;
  }

  const Point& point(std::size_t idx) const { return points_[idx]; }
  Vec2R pos(std::size_t idx) const { return points_[idx].pos(); }
  const Vec2I& ipos(std::size_t idx) const { return shadow_[idx]; }

  std::int64_t id_of(std::size_t idx) const { return points_[idx].id; }
  std::size_t index_of(std::int64_t id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw std::out_of_range("unknown vertex id " + std::to_string(id));
    return it->second;
  }
  bool has_id(std::int64_t id) const { return index_.count(id) != 0; }

  bool is_constraint(std::size_t a, std::size_t b) const {
    auto key = ordered(a, b);
    return std::binary_search(constraints_.begin(), constraints_.end(), key);
  }
  // Indices of constraint partners of vertex idx.
  const std::vector<std::int32_t>& constraint_partners(std::size_t idx) const {
    return incident_[idx];
  }

 private:
  static std::pair<std::int32_t, std::int32_t> ordered(std::size_t a, std::size_t b) {
    return {std::int32_t(std::min(a, b)), std::int32_t(std::max(a, b))};
  }

  void build(std::vector<Point> pts, std::vector<std::pair<std::int64_t, std::int64_t>> cons,
             Validation level, int cone_count) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i].id == pts[i + 1].id)
        throw ValidationError("duplicate vertex id " + std::to_string(pts[i].id));
    points_ = std::move(pts);
    for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i].id] = i;

    // Integer shadow with a shared denominator.
    Int lcm_den = 1;
    for (const auto& p : points_) {
      lcm_den = lcm(lcm_den, denominator(p.x));
      lcm_den = lcm(lcm_den, denominator(p.y));
    }
    shadow_.reserve(points_.size());
    for (const auto& p : points_)
      shadow_.emplace_back(numerator(p.x) * (lcm_den / denominator(p.x)),
                           numerator(p.y) * (lcm_den / denominator(p.y)));

    constraints_.reserve(cons.size());
    for (auto [ia, ib] : cons) {
      if (!has_id(ia) || !has_id(ib))
        throw ValidationError("constraint references unknown vertex id");
      std::size_t a = index_of(ia), b = index_of(ib);
      if (a == b) throw ValidationError("constraint from a vertex to itself");
      constraints_.push_back(ordered(a, b));
    }
    std::sort(constraints_.begin(), constraints_.end());
    constraints_.erase(std::unique(constraints_.begin(), constraints_.end()),
                       constraints_.end());

    incident_.assign(points_.size(), {});
    for (auto [a, b] : constraints_) {
      incident_[a].push_back(b);
      incident_[b].push_back(a);
    }

    // Constraints must not cross each other and must not pass through a
    // third vertex.
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      const auto [a, b] = constraints_[i];
      for (std::size_t j = i + 1; j < constraints_.size(); ++j) {
        const auto [c, d] = constraints_[j];
        if (properly_intersects(shadow_[a], shadow_[b], shadow_[c], shadow_[d]))
          throw ValidationError("constraints cross: (" + std::to_string(id_of(a)) + "," +
                                std::to_string(id_of(b)) + ") and (" + std::to_string(id_of(c)) +
                                "," + std::to_string(id_of(d)) + ")");
      }
      for (std::size_t v = 0; v < shadow_.size(); ++v) {
        if (v == std::size_t(a) || v == std::size_t(b)) continue;
        if (segment_crosses_point_interior(shadow_[a], shadow_[b], shadow_[v]))
          throw ValidationError("constraint (" + std::to_string(id_of(a)) + "," +
                                std::to_string(id_of(b)) + ") passes through vertex " +
                                std::to_string(id_of(v)));
      }
    }

    if (level == Validation::full) {
      std::vector<Vec2R> ps;
      std::vector<std::int64_t> ids;
      ps.reserve(points_.size());
      for (const auto& p : points_) {
        ps.push_back(p.pos());
        ids.push_back(p.id);
      }
      PositionReport rep = validate_general_position(ps, ids, cone_count);
      if (!rep.ok())
        throw ValidationError("general position violated:\n" + rep.describe(), std::move(rep));
    }
  }

  std::vector<Point> points_;
  std::vector<std::pair<std::int32_t, std::int32_t>> constraints_;  // index pairs, low < high
  std::vector<Vec2I> shadow_;
  std::vector<std::vector<std::int32_t>> incident_;
  std::map<std::int64_t, std::size_t> index_;
};

}  // namespace visroute
