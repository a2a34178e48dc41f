#pragma once

// Exact planar predicates, templated over the coordinate ring so the same
// code runs on Rational coordinates (public API) and on denominator-cleared
// Int coordinates (the fast path used by graph construction).  Every
// predicate here is invariant under uniform positive scaling, which is what
// makes the integer shadow sound.

#include "visroute/rational.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace visroute {

template <class T>
struct Vec2 {
  T x{}, y{};

  Vec2() = default;
  Vec2(T vx, T vy) : x(std::move(vx)), y(std::move(vy)) {}

  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

using Vec2R = Vec2<Rational>;
using Vec2I = Vec2<Int>;

template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class T>
T squared_distance(const Vec2<T>& a, const Vec2<T>& b) {
  const Vec2<T> d = b - a;
  return dot(d, d);
}

// +1 when p->q->r turns left, -1 when it turns right, 0 when collinear.
template <class T>
int orientation(const Vec2<T>& p, const Vec2<T>& q, const Vec2<T>& r) {
  return sign_of(cross(q - p, r - p));
}

template <class T>
bool collinear(const Vec2<T>& p, const Vec2<T>& q, const Vec2<T>& r) {
  return orientation(p, q, r) == 0;
}

// p lies on the closed segment [a, b].
template <class T>
bool on_segment_closed(const Vec2<T>& p, const Vec2<T>& a, const Vec2<T>& b) {
  if (orientation(a, b, p) != 0) return false;
  return sign_of(dot(a - p, b - p)) <= 0;
}

// p lies strictly inside segment (a, b) — i.e. the segment passes through p.
template <class T>
bool segment_crosses_point_interior(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& p) {
  if (p == a || p == b) return false;
  return on_segment_closed(p, a, b);
}

// Proper crossing: the open interiors of [a,b] and [c,d] share a point.
// Shared endpoints and mere touching do not count.
template <class T>
bool properly_intersects(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c,
                         const Vec2<T>& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Closed intersection: the closed segments share at least one point,
// including touching, shared endpoints and collinear overlap.
template <class T>
bool segments_intersect_closed(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c,
                               const Vec2<T>& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment_closed(c, a, b)) return true;
  if (o2 == 0 && on_segment_closed(d, a, b)) return true;
  if (o3 == 0 && on_segment_closed(a, c, d)) return true;
  if (o4 == 0 && on_segment_closed(b, c, d)) return true;
  return false;
}

// Exact crossing point of two properly intersecting segments.  Only defined
// over the rational coordinates — the result generally needs a denominator.
inline Vec2R proper_intersection_point(const Vec2R& a, const Vec2R& b, const Vec2R& c,
                                       const Vec2R& d) {
  const Vec2R r = b - a;
  const Vec2R s = d - c;
  const Rational denom = cross(r, s);
  if (denom.is_zero()) throw std::logic_error("intersection of parallel segments");
  const Rational t = cross(c - a, s) / denom;
  return {a.x + t * r.x, a.y + t * r.y};
}

// p inside or on the closed triangle (a, b, c); the triangle may be given in
// either orientation.
template <class T>
bool in_triangle_closed(const Vec2<T>& p, const Vec2<T>& a, const Vec2<T>& b,
                        const Vec2<T>& c) {
  int o = orientation(a, b, c);
  if (o == 0) return on_segment_closed(p, a, b) || on_segment_closed(p, b, c) ||
                     on_segment_closed(p, a, c);
  const Vec2<T>&u = o > 0 ? b : c, &v = o > 0 ? c : b;
  return orientation(a, u, p) >= 0 && orientation(u, v, p) >= 0 && orientation(v, a, p) >= 0;
}

// Closed triangle vs closed segment intersection test.
template <class T>
bool triangle_intersects_segment(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c,
                                 const Vec2<T>& s, const Vec2<T>& t) {
  if (in_triangle_closed(s, a, b, c) || in_triangle_closed(t, a, b, c)) return true;
  return segments_intersect_closed(s, t, a, b) || segments_intersect_closed(s, t, b, c) ||
         segments_intersect_closed(s, t, a, c);
}

// Sign of the in-circle determinant: +1 when d lies strictly inside the
// circumcircle of the counterclockwise triangle (a, b, c), -1 when strictly
// outside, 0 when cocircular.  For a clockwise triangle the sign flips.
template <class T>
int incircle(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c, const Vec2<T>& d) {
  const Vec2<T> ad = a - d, bd = b - d, cd = c - d;
  const T ad2 = dot(ad, ad), bd2 = dot(bd, bd), cd2 = dot(cd, cd);
  const T det = ad2 * cross(bd, cd) - bd2 * cross(ad, cd) + cd2 * cross(ad, bd);
  return sign_of(det);
}

}  // namespace visroute
