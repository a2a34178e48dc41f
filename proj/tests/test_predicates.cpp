#include "visroute/predicates.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace visroute;

namespace {
Vec2I P(long long x, long long y) { return Vec2I(Int(x), Int(y)); }
}  // namespace

TEST_CASE("orientation distinguishes left, right and straight") {
  CHECK(orientation(P(0, 0), P(2, 0), P(1, 1)) == 1);
  CHECK(orientation(P(0, 0), P(2, 0), P(1, -1)) == -1);
  CHECK(orientation(P(0, 0), P(2, 2), P(5, 5)) == 0);
  CHECK(collinear(P(0, 0), P(2, 2), P(5, 5)));
  CHECK_FALSE(collinear(P(0, 0), P(2, 2), P(5, 6)));
}

TEST_CASE("proper intersection requires interior crossing") {
  // genuine crossing
  CHECK(properly_intersects(P(0, 0), P(4, 4), P(0, 4), P(4, 0)));
  // shared endpoint is not proper
  CHECK_FALSE(properly_intersects(P(0, 0), P(4, 4), P(0, 0), P(4, 0)));
  // T-touch: endpoint lands on the other segment's interior
  CHECK_FALSE(properly_intersects(P(0, 0), P(4, 0), P(2, 0), P(2, 3)));
  CHECK_FALSE(properly_intersects(P(2, 0), P(2, 3), P(0, 0), P(4, 0)));
  // disjoint
  CHECK_FALSE(properly_intersects(P(0, 0), P(1, 1), P(5, 5), P(6, 7)));
  // collinear overlap is not a proper crossing
  CHECK_FALSE(properly_intersects(P(0, 0), P(4, 4), P(1, 1), P(6, 6)));
}

TEST_CASE("closed intersection counts touching and overlap") {
  CHECK(segments_intersect_closed(P(0, 0), P(4, 4), P(0, 4), P(4, 0)));
  CHECK(segments_intersect_closed(P(0, 0), P(4, 4), P(0, 0), P(4, 0)));
  CHECK(segments_intersect_closed(P(0, 0), P(4, 0), P(2, 0), P(2, 3)));
  CHECK(segments_intersect_closed(P(0, 0), P(4, 4), P(1, 1), P(6, 6)));
  CHECK_FALSE(segments_intersect_closed(P(0, 0), P(1, 1), P(5, 5), P(6, 7)));
}

TEST_CASE("segment and point membership predicates") {
  CHECK(on_segment_closed(P(1, 1), P(0, 0), P(2, 2)));
  CHECK(on_segment_closed(P(0, 0), P(0, 0), P(2, 2)));  // endpoint included
  CHECK_FALSE(on_segment_closed(P(3, 3), P(0, 0), P(2, 2)));
  CHECK(segment_crosses_point_interior(P(0, 0), P(2, 2), P(1, 1)));
  CHECK_FALSE(segment_crosses_point_interior(P(0, 0), P(2, 2), P(0, 0)));
  CHECK_FALSE(segment_crosses_point_interior(P(0, 0), P(2, 2), P(2, 2)));
  CHECK_FALSE(segment_crosses_point_interior(P(0, 0), P(2, 2), P(1, 2)));
}

TEST_CASE("triangle membership works in both orientations") {
  const Vec2I a = P(0, 0), b = P(4, 0), c = P(0, 4);
  CHECK(in_triangle_closed(P(1, 1), a, b, c));
  CHECK(in_triangle_closed(P(1, 1), a, c, b));  // reversed orientation
  CHECK(in_triangle_closed(P(2, 0), a, b, c));  // on an edge
  CHECK(in_triangle_closed(P(0, 0), a, b, c));  // on a corner
  CHECK_FALSE(in_triangle_closed(P(3, 3), a, b, c));
  CHECK_FALSE(in_triangle_closed(P(-1, 0), a, b, c));
}

TEST_CASE("triangle vs segment covers containment and crossing") {
  const Vec2I a = P(0, 0), b = P(8, 0), c = P(0, 8);
  CHECK(triangle_intersects_segment(a, b, c, P(1, 1), P(2, 2)));    // inside
  CHECK(triangle_intersects_segment(a, b, c, P(-2, 1), P(10, 1)));  // pierces
  CHECK(triangle_intersects_segment(a, b, c, P(1, 1), P(20, 20)));  // one end in
  CHECK_FALSE(triangle_intersects_segment(a, b, c, P(10, 10), P(20, 10)));
}

TEST_CASE("intersection point of a proper crossing is exact") {
  const Vec2R a{Rational(0), Rational(0)}, b{Rational(1), Rational(1)};
  const Vec2R c{Rational(0), Rational(1)}, d{Rational(1), Rational(0)};
  const Vec2R p = proper_intersection_point(a, b, c, d);
  CHECK(p.x == Rational(1, 2));
  CHECK(p.y == Rational(1, 2));

  // asymmetric crossing keeps exact fractions
  const Vec2R e{Rational(0), Rational(0)}, f{Rational(3), Rational(1)};
  const Vec2R g{Rational(1), Rational(-1)}, h{Rational(1), Rational(5)};
  const Vec2R q = proper_intersection_point(e, f, g, h);
  CHECK(q.x == Rational(1));
  CHECK(q.y == Rational(1, 3));
}

TEST_CASE("incircle sign matches orientation convention") {
  // unit-ish square: (0,0), (4,0), (4,4), (0,4); center inside any ccw triangle
  CHECK(incircle(P(0, 0), P(4, 0), P(4, 4), P(2, 2)) == 1);
  // clockwise triangle flips the sign
  CHECK(incircle(P(0, 0), P(4, 4), P(4, 0), P(2, 2)) == -1);
  // fourth corner of the square is cocircular
  CHECK(incircle(P(0, 0), P(4, 0), P(4, 4), P(0, 4)) == 0);
  // far point is strictly outside
  CHECK(incircle(P(0, 0), P(4, 0), P(4, 4), P(100, 100)) == -1);
}

TEST_CASE("crossing predicates are symmetric under argument swaps") {
  std::mt19937_64 rng(42);
  auto coord = [&]() { return (long long)(rng() % 41) - 20; };
  for (int k = 0; k < 500; ++k) {
    const Vec2I a = P(coord(), coord()), b = P(coord(), coord());
    const Vec2I c = P(coord(), coord()), d = P(coord(), coord());
    if (a == b || c == d) continue;
    const bool r = properly_intersects(a, b, c, d);
    CHECK(properly_intersects(b, a, c, d) == r);
    CHECK(properly_intersects(a, b, d, c) == r);
    CHECK(properly_intersects(c, d, a, b) == r);
    const bool cl = segments_intersect_closed(a, b, c, d);
    CHECK(segments_intersect_closed(c, d, a, b) == cl);
    if (r) CHECK(cl);  // proper implies closed
  }
}
