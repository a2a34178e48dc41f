#pragma once

// Cone geometry.  Each vertex carries m cones of angle 2*pi/m, numbered
// clockwise with cone 0 bisected by the upward vertical.  Constraints
// incident to the vertex split cones into closed subcones; a constraint
// endpoint lying on a splitting ray belongs to both adjacent subcones.
//
// For m = 6 everything is exact: boundary rays point along (+-1, +-sqrt(3))
// and (+-1, 0), bisectors along (0, +-1) and (+-sqrt(3), +-1), so membership
// and projection comparisons are sign evaluations in the Sqrt3 ring.  Other
// values of m are supported on a best-effort basis through high-precision
// floating point with escalation; only m = 6 is certified.
//
// The six 60-degree regions around a vertex, clockwise from north, serve as
// both the positive and the negative cones of the half-theta machinery:
// region r is a positive cone when r is even (C0 up, C2 lower-right, C1
// lower-left) and the reflex partner of the opposite positive cone when r is
// odd.  Regions are half-open: a direction exactly on a boundary ray belongs
// to the region counterclockwise of the ray.  Directions between vertices of
// a validated instance never lie on a boundary ray.

#include "visroute/predicates.hpp"
#include "visroute/sqrt3.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace visroute {

inline constexpr int kHexCones = 6;

inline constexpr bool positive_region(int region) { return region % 2 == 0; }

// Region label in the conventional clockwise naming starting at C0.
inline const char* region_name(int region) {
  static const char* names[6] = {"C0", "~C1", "C2", "~C0", "C1", "~C2"};
  return names[region % 6];
}

// Cross product of boundary ray k (at clockwise angle -30 + 60k degrees from
// north) with direction d.  Ray sequence: (-1,s3), (1,s3), (1,0), (1,-s3),
// (-1,-s3), (-1,0) where s3 = sqrt(3).
template <class T>
Sqrt3<T> ray_cross6(int k, const Vec2<T>& d) {
  static constexpr int xa[6] = {-1, 1, 1, 1, -1, -1};
  static constexpr int yb[6] = {1, 1, 0, -1, -1, 0};
  return Sqrt3<T>(T(xa[k]) * d.y, T(-yb[k]) * d.x);
}

// Projection of d onto the bisector of cone i, up to a fixed positive factor
// shared by all directions; valid for comparisons within one cone.
template <class T>
Sqrt3<T> bisector_projection6(int i, const Vec2<T>& d) {
  static constexpr int pa[6] = {1, 1, -1, -1, -1, 1};
  static constexpr int pb[6] = {0, 1, 1, 0, -1, -1};
  return Sqrt3<T>(T(pa[i]) * d.y, T(pb[i]) * d.x);
}

// Exact cone index of nonzero direction d for m = 6.
template <class T>
int cone_of6(const Vec2<T>& d) {
  if (sign_of(d.x) == 0 && sign_of(d.y) == 0)
    throw std::invalid_argument("cone of zero direction");
  for (int i = 0; i < 6; ++i) {
    if (sign_of(ray_cross6(i, d)) < 0 && sign_of(ray_cross6((i + 1) % 6, d)) >= 0) return i;
  }
  throw std::logic_error("direction escaped all six cones");
}

struct SubconeRef {
  std::int64_t apex_id = -1;
  int cone = 0;       // region index, clockwise from north
  int sub = 0;        // subcone index within the cone, clockwise
  bool positive = false;
};

// The subcone structure of one vertex for m = 6: per region, the clockwise-
// sorted splitting directions contributed by incident constraints whose other
// endpoint falls in that region.
template <class T>
struct ConeDecomposition6 {
  std::int64_t apex_id = -1;
  Vec2<T> apex;
  std::array<std::vector<Vec2<T>>, 6> splits;  // directions from apex, cw-sorted

  int subcone_count(int region) const { return int(splits[region].size()) + 1; }
};

template <class T>
ConeDecomposition6<T> decompose_cones6(std::int64_t apex_id, const Vec2<T>& apex,
                                       const std::vector<Vec2<T>>& constraint_partners) {
  ConeDecomposition6<T> dec;
  dec.apex_id = apex_id;
  dec.apex = apex;
  for (const Vec2<T>& p : constraint_partners) {
    const Vec2<T> d = p - apex;
    dec.splits[cone_of6(d)].push_back(d);
  }
  for (auto& list : dec.splits) {
    // Within one cone all directions span less than 180 degrees, so the
    // pairwise cross product is a total clockwise order.
    std::sort(list.begin(), list.end(), [](const Vec2<T>& a, const Vec2<T>& b) {
      return sign_of(cross(a, b)) < 0;  // b strictly clockwise of a
    });
  }
  return dec;
}

// Subcone indices of direction d within its region: one index normally, two
// when d lies exactly on a splitting ray (then d is a constraint partner).
template <class T>
void subcones_of6(const ConeDecomposition6<T>& dec, const Vec2<T>& d, int region,
                  int out[2], int* count) {
  const auto& list = dec.splits[region];
  int below = 0;
  int on = -1;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const int s = sign_of(cross(list[k], d));
    if (s < 0) {
      ++below;  // d strictly clockwise of this split
    } else if (s == 0) {
      on = int(k);
    }
  }
  if (on >= 0) {
    out[0] = on;
    out[1] = on + 1;
    *count = 2;
  } else {
    out[0] = below;
    *count = 1;
  }
}

// --- general m (best effort) --------------------------------------------

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Cone index for arbitrary m >= 3 via high-precision angle computation.
// Throws when the direction is too close to a boundary ray to classify.
inline int cone_of_m(const Vec2R& d, int m) {
  if (m == 6) return cone_of6(d);
  if (m < 3) throw std::invalid_argument("cone count must be at least 3");
  if (d.x.is_zero() && d.y.is_zero()) throw std::invalid_argument("cone of zero direction");
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat x = d.x.convert_to<BigFloat>();
  const BigFloat y = d.y.convert_to<BigFloat>();
  // Clockwise angle from north in [0, 2*pi).
  BigFloat phi = atan2(x, y);
  if (phi < 0) phi += 2 * pi;
  const BigFloat width = 2 * pi / m;
  BigFloat shifted = phi + width / 2;
  if (shifted >= 2 * pi) shifted -= 2 * pi;
  const BigFloat pos = shifted / width;
  const BigFloat nearest = abs(pos - floor(pos + BigFloat(0.5)));
  if (nearest < BigFloat("1e-40"))
    throw std::domain_error("direction too close to a cone boundary for m != 6");
  int idx = int(floor(pos).convert_to<long>());
  return idx % m;
}

// Compare projections of (v - u) and (w - u) on the bisector of cone i.
// Returns -1 when v projects strictly closer to u, +1 when w does.
// Exact for m = 6; best-effort with escalation otherwise.
inline int projection_compare(const Vec2R& u, const Vec2R& v, const Vec2R& w, int cone,
                              int m) {
  if (m == 6) {
    const int s = sign_of(bisector_projection6(cone, v - w));
    if (s == 0)
      throw std::domain_error("projection tie: two vertices on a line perpendicular to a bisector");
    return s;
  }
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat ang = BigFloat(2) * pi * cone / m;
  const BigFloat bx = sin(ang), by = cos(ang);
  const Vec2R dd = v - w;
  const BigFloat proj = bx * dd.x.convert_to<BigFloat>() + by * dd.y.convert_to<BigFloat>();
  if (abs(proj) < BigFloat("1e-40"))
    throw std::domain_error("projection comparison too close to call for m != 6");
  return proj > 0 ? 1 : -1;
}

}  // namespace visroute
