#include "visroute/cones.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace visroute;

namespace {
Vec2I D(long long x, long long y) { return Vec2I(Int(x), Int(y)); }
}  // namespace

TEST_CASE("hex cone indices, clockwise from north") {
  CHECK(cone_of6(D(0, 1)) == 0);    // straight up
  CHECK(cone_of6(D(1, 4)) == 0);    // a bit east of north
  CHECK(cone_of6(D(-1, 4)) == 0);   // a bit west of north
  CHECK(cone_of6(D(4, 1)) == 1);    // east-ish
  CHECK(cone_of6(D(4, -1)) == 2);   // lower right
  CHECK(cone_of6(D(0, -1)) == 3);   // straight down
  CHECK(cone_of6(D(-4, -1)) == 4);  // lower left
  CHECK(cone_of6(D(-4, 1)) == 5);   // upper left
  CHECK_THROWS(cone_of6(D(0, 0)));
}

TEST_CASE("boundary directions belong to the counterclockwise region") {
  // east lies on the ray between regions 1 and 2 and must land in region 1
  CHECK(cone_of6(D(1, 0)) == 1);
  // west likewise separates regions 4 and 5
  CHECK(cone_of6(D(-1, 0)) == 4);
}

TEST_CASE("alternating sign pattern of regions") {
  CHECK(positive_region(0));
  CHECK_FALSE(positive_region(1));
  CHECK(positive_region(2));
  CHECK_FALSE(positive_region(3));
  CHECK(positive_region(4));
  CHECK_FALSE(positive_region(5));
}

TEST_CASE("opposite directions land in opposite regions") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const long long x = (long long)(rng() % 201) - 100;
    const long long y = (long long)(rng() % 201) - 100;
    if (x == 0 && y == 0) continue;
    const int r = cone_of6(D(x, y));
    CHECK(cone_of6(D(-x, -y)) == (r + 3) % 6);
  }
}

TEST_CASE("splitting rays partition a cone into clockwise-numbered subcones") {
  const Vec2I apex = D(0, 0);
  // two constraint partners inside region 0, the left one first in cw order
  std::vector<Vec2I> partners = {D(2, 10), D(-1, 10)};  // partner order is irrelevant
  const auto dec = decompose_cones6<Int>(-1, apex, partners);
  REQUIRE(dec.subcone_count(0) == 3);
  for (int r = 1; r < 6; ++r) CHECK(dec.subcone_count(r) == 1);
  // the stored splits must run clockwise: (-1,10) before (2,10)
  REQUIRE(dec.splits[0].size() == 2);
  CHECK(dec.splits[0][0] == D(-1, 10));
  CHECK(dec.splits[0][1] == D(2, 10));

  int subs[2];
  int cnt = 0;
  subcones_of6(dec, D(-2, 10), 0, subs, &cnt);  // west of both rays
  REQUIRE(cnt == 1);
  CHECK(subs[0] == 0);
  subcones_of6(dec, D(0, 10), 0, subs, &cnt);  // between the rays
  REQUIRE(cnt == 1);
  CHECK(subs[0] == 1);
  subcones_of6(dec, D(3, 10), 0, subs, &cnt);  // east of both rays
  REQUIRE(cnt == 1);
  CHECK(subs[0] == 2);
}

TEST_CASE("a direction on a splitting ray belongs to both adjacent subcones") {
  const auto dec = decompose_cones6<Int>(-1, D(0, 0), {D(2, 10), D(-1, 10)});
  int subs[2];
  int cnt = 0;
  subcones_of6(dec, D(-1, 10), 0, subs, &cnt);
  REQUIRE(cnt == 2);
  CHECK(subs[0] == 0);
  CHECK(subs[1] == 1);
  // scale invariance: any positive multiple of the ray direction
  subcones_of6(dec, D(-3, 30), 0, subs, &cnt);
  REQUIRE(cnt == 2);
  CHECK(subs[0] == 0);
  CHECK(subs[1] == 1);
  subcones_of6(dec, D(2, 10), 0, subs, &cnt);
  REQUIRE(cnt == 2);
  CHECK(subs[0] == 1);
  CHECK(subs[1] == 2);
}

TEST_CASE("bisector projections order vertices by depth along the cone axis") {
  // region 0: bisector points straight up, projection grows with y
  CHECK(sign_of(bisector_projection6(0, D(5, 3) - D(-4, 2))) > 0);
  CHECK(sign_of(bisector_projection6(0, D(5, 1) - D(-4, 2))) < 0);
  // region 2: bisector at 120 degrees clockwise from north ~ (sqrt3, -1)/2
  // projection of d onto it ~ sqrt3*dx - dy
  CHECK(sign_of(bisector_projection6(2, D(10, 2))) > 0);
  CHECK(sign_of(bisector_projection6(2, D(-10, 2))) < 0);
  CHECK(sign_of(bisector_projection6(2, D(1, -10))) > 0);
  // region 3: bisector points straight down
  CHECK(sign_of(bisector_projection6(3, D(7, -2))) > 0);
  CHECK(sign_of(bisector_projection6(3, D(7, 2))) < 0);
}

TEST_CASE("projection comparison agrees between exact and generic paths") {
  const Vec2R u{Rational(0), Rational(0)};
  const Vec2R v{Rational(1, 10), Rational(1)};
  const Vec2R w{Rational(1, 5), Rational(3, 2)};
  CHECK(projection_compare(u, v, w, 0, 6) < 0);   // v is closer along the axis
  CHECK(projection_compare(u, w, v, 0, 6) > 0);
  // the high-precision fallback for other cone counts agrees here
  CHECK(projection_compare(u, v, w, 0, 12) < 0);
}

TEST_CASE("generic cone counts classify directions and refuse the razor edge") {
  // m = 4: quarter-plane cones, cone 0 bisected by north spans (-45, 45]-ish
  const Vec2R up{Rational(1, 100), Rational(1)};
  CHECK(cone_of_m(up, 4) == 0);
  const Vec2R east{Rational(1), Rational(1, 100)};
  CHECK(cone_of_m(east, 4) == 1);
  // exactly diagonal sits on a boundary ray for m = 4 and must be refused
  CHECK_THROWS(cone_of_m(Vec2R{Rational(1), Rational(1)}, 4));
  // m = 6 routes through the exact classifier
  CHECK(cone_of_m(Vec2R{Rational(0), Rational(1)}, 6) == 0);
  CHECK_THROWS(cone_of_m(Vec2R{Rational(0), Rational(0)}, 6));
  CHECK_THROWS(cone_of_m(up, 2));
}
