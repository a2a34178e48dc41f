#pragma once

// Scalars of the form a + b*sqrt(3) over an exact base ring.  The hexagonal
// cone geometry lives entirely in this field: cone boundary rays point along
// (±1, ±sqrt(3)) and (±1, 0), and bisectors along (0, 1) and (±sqrt(3), ±1),
// so membership and projection comparisons reduce to exact sign evaluations
// here.  The ring is closed under multiplication:
//   (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3.

#include <stdexcept>

namespace visroute {

template <class T>
struct Sqrt3 {
  T a{};  // rational (or integer) part
  T b{};  // coefficient of sqrt(3)

  Sqrt3() = default;
  Sqrt3(T ra, T rb) : a(std::move(ra)), b(std::move(rb)) {}
  static Sqrt3 of(T v) { return Sqrt3(std::move(v), T(0)); }

  Sqrt3 operator+(const Sqrt3& o) const { return {a + o.a, b + o.b}; }
  Sqrt3 operator-(const Sqrt3& o) const { return {a - o.a, b - o.b}; }
  Sqrt3 operator-() const { return {-a, -b}; }
  Sqrt3 operator*(const Sqrt3& o) const {
    return {a * o.a + 3 * (b * o.b), a * o.b + b * o.a};
  }
  Sqrt3 operator*(const T& f) const { return {a * f, b * f}; }
};

// Exact sign of a + b*sqrt(3).  When a and b disagree in sign the comparison
// |a| <> |b|sqrt(3) is squared; a^2 = 3b^2 would make sqrt(3) rational and
// cannot happen for nonzero exact inputs.
template <class T>
int sign_of(const Sqrt3<T>& v) {
  const int sa = sign_of(v.a), sb = sign_of(v.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const T lhs = v.a * v.a;
  const T rhs = 3 * (v.b * v.b);
  if (lhs == rhs) throw std::logic_error("sqrt(3) compared equal to a rational");
  return lhs > rhs ? sa : sb;
}

template <class T>
bool operator<(const Sqrt3<T>& x, const Sqrt3<T>& y) {
  return sign_of(x - y) < 0;
}
template <class T>
bool operator>(const Sqrt3<T>& x, const Sqrt3<T>& y) {
  return sign_of(x - y) > 0;
}
template <class T>
bool operator==(const Sqrt3<T>& x, const Sqrt3<T>& y) {
  return sign_of(x - y) == 0;
}

}  // namespace visroute
