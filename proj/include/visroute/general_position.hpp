#pragma once

// General-position validation.  Degenerate inputs are rejected with a
// structured report instead of being perturbed; every downstream exactness
// claim leans on these checks.
//
// The four conditions, for cone count m over exact rational coordinates:
//   1. no two vertices on a line parallel to a cone boundary ray,
//   2. no two vertices on a line perpendicular to a cone bisector,
//   3. no three vertices collinear,
//   4. no four vertices cocircular.
//
// For m = 6 the boundary rays have slopes 0 and +-sqrt(3) and the bisector
// perpendiculars have slopes 0 and -+1/sqrt(3); a rational segment can only
// realize the slope-0 case, so conditions 1 and 2 both reduce to "no two
// vertices share a y-coordinate".  The irrational-slope cases are impossible
// and are not searched for.

#include "visroute/cones.hpp"
#include "visroute/predicates.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace visroute {

enum class ViolationKind {
  duplicate_point,
  ray_parallel_pair,       // also covers the bisector-perpendicular condition
  collinear_triple,
  cocircular_quadruple,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::int64_t> ids;

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case ViolationKind::duplicate_point: os << "duplicate point"; break;
      case ViolationKind::ray_parallel_pair:
        os << "two vertices on a line parallel to a cone ray (perpendicular to a bisector)";
        break;
      case ViolationKind::collinear_triple: os << "three collinear vertices"; break;
      case ViolationKind::cocircular_quadruple: os << "four cocircular vertices"; break;
    }
    os << ":";
    for (auto id : ids) os << ' ' << id;
    return os.str();
  }
};

struct PositionReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }

  std::string describe() const {
    std::string out;
    for (const auto& v : violations) {
      out += v.describe();
      out += '\n';
    }
    return out;
  }
};

namespace detail {

// Canonical undirected direction: flipped into the right half-plane (or the
// positive y-axis), components divided by their gcd.  Two point pairs are
// parallel exactly when their canonical directions coincide.
inline std::pair<Int, Int> canonical_direction(Vec2I d) {
  if (sign_of(d.x) < 0 || (sign_of(d.x) == 0 && sign_of(d.y) < 0)) {
    d.x = -d.x;
    d.y = -d.y;
  }
  Int g = gcd(abs(d.x), abs(d.y));
  if (g.is_zero()) g = 1;
  return {d.x / g, d.y / g};
}

// Collinear triples among pts (reported through ids) in O(n^2 log n):
// for each anchor, two other points aligned in the same canonical direction
// witness a collinear triple.
inline void find_collinear(const std::vector<Vec2I>& pts, const std::vector<std::int64_t>& ids,
                           PositionReport& report, std::size_t cap = 16) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a + 2 < n; ++a) {
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (std::size_t b = a + 1; b < n; ++b) {
      auto dir = canonical_direction(pts[b] - pts[a]);
      auto [it, fresh] = seen.emplace(dir, b);
      if (!fresh) {
        report.violations.push_back(
            {ViolationKind::collinear_triple, {ids[a], ids[it->second], ids[b]}});
        if (report.violations.size() >= cap) return;
      }
    }
  }
}

}  // namespace detail

// Full general-position validation for m = 6 (exact).  For other m the
// ray/bisector conditions are checked with high-precision floating point and
// the result is best-effort; collinearity and cocircularity are exact for
// every m.  Reporting stops after a handful of violations.
inline PositionReport validate_general_position(const std::vector<Vec2R>& points,
                                                const std::vector<std::int64_t>& ids, int m = 6) {
  PositionReport report;
  const std::size_t n = points.size();
  const std::size_t cap = 16;

  // Shared integer shadow: scale all coordinates by the lcm of denominators.
  Int lcm_den = 1;
  for (const auto& p : points) {
    lcm_den = lcm(lcm_den, denominator(p.x));
    lcm_den = lcm(lcm_den, denominator(p.y));
  }
  std::vector<Vec2I> pts;
  pts.reserve(n);
  for (const auto& p : points)
    pts.emplace_back(numerator(p.x) * (lcm_den / denominator(p.x)),
                     numerator(p.y) * (lcm_den / denominator(p.y)));

  // Duplicates and ray-parallel pairs.  For m = 6 the only realizable ray
  // direction over the rationals is horizontal, i.e. a shared y-coordinate.
  {
    std::map<Int, std::size_t> by_y;
    std::map<std::pair<Int, Int>, std::size_t> by_xy;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, fresh] = by_xy.emplace(std::make_pair(pts[i].x, pts[i].y), i);
      if (!fresh) {
        report.violations.push_back(
            {ViolationKind::duplicate_point, {ids[it->second], ids[i]}});
        continue;
      }
      if (m == 6) {
        auto [yit, yfresh] = by_y.emplace(pts[i].y, i);
        if (!yfresh)
          report.violations.push_back(
              {ViolationKind::ray_parallel_pair, {ids[yit->second], ids[i]}});
      }
    }
  }
  if (m != 6) {
    // Best-effort boundary/bisector alignment check for exotic cone counts.
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    for (std::size_t i = 0; i < n && report.violations.size() < cap; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const BigFloat dx = BigFloat(pts[j].x - pts[i].x);
        const BigFloat dy = BigFloat(pts[j].y - pts[i].y);
        const BigFloat ang = atan2(dx, dy) * m / pi;  // ray-parallel iff (2k+1)/1 position
        const BigFloat frac = abs(ang - floor(ang + BigFloat(0.5)));
        BigFloat parity = floor(ang + BigFloat(0.5));
        const bool odd = (parity.convert_to<long long>() % 2) != 0;
        if (frac < BigFloat("1e-40") && odd) {
          report.violations.push_back({ViolationKind::ray_parallel_pair, {ids[i], ids[j]}});
          break;
        }
      }
  }
  if (report.violations.size() >= cap) return report;

  detail::find_collinear(pts, ids, report, cap);
  if (report.violations.size() >= cap) return report;

  // Cocircular quadruples: inversion at each anchor maps circles through the
  // anchor to lines, so a cocircular quadruple involving the anchor shows up
  // as a collinear triple of inverted points.  Homogeneous form keeps the
  // arithmetic in integers: point k inverts to (pts[k]-a) / |pts[k]-a|^2.
  for (std::size_t a = 0; a + 3 < n; ++a) {
    std::vector<Vec2I> num;    // numerators of inverted points
    std::vector<Int> den;      // positive denominators
    std::vector<std::size_t> who;
    num.reserve(n - a - 1);
    for (std::size_t k = a + 1; k < n; ++k) {
      Vec2I d = pts[k] - pts[a];
      num.push_back(d);
      den.push_back(dot(d, d));
      who.push_back(k);
    }
    const std::size_t mcount = num.size();
    for (std::size_t b = 0; b + 2 < mcount; ++b) {
      std::map<std::pair<Int, Int>, std::size_t> seen;
      for (std::size_t c = b + 1; c < mcount; ++c) {
        // Direction from inverted b to inverted c, cleared of denominators.
        Vec2I dir{num[c].x * den[b] - num[b].x * den[c],
                  num[c].y * den[b] - num[b].y * den[c]};
        auto key = detail::canonical_direction(dir);
        auto [it, fresh] = seen.emplace(key, c);
        if (!fresh) {
          report.violations.push_back({ViolationKind::cocircular_quadruple,
                                       {ids[a], ids[who[b]], ids[who[it->second]], ids[who[c]]}});
          if (report.violations.size() >= cap) return report;
        }
      }
    }
  }
  return report;
}

}  // namespace visroute
