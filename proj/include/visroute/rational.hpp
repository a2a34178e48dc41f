#pragma once

// Exact arithmetic foundation: arbitrary-precision rationals for vertex
// coordinates, plus rational enclosures of square roots for length
// computations.  Everything routed through this header is deterministic;
// there is no floating point on any decision path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace visroute {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

// Parses "p/q", "p", or a plain decimal such as "-12.625" into an exact
// rational.  Scientific notation, inf and nan are rejected: a decimal that
// went through binary floating point once cannot be trusted to be exact.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty()) fail("missing numerator or denominator");
    auto signed_digits = [&](std::string_view s) {
      const bool m = s[0] == '-';
      if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
      if (s.empty()) fail("sign without digits");
      Int v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') fail("not an integer ratio");
        v *= 10;
        v += c - '0';
      }
      return m ? -v : v;
    };
    const Int n = signed_digits(num);
    const Int d = signed_digits(den);
    if (d.is_zero()) fail("zero denominator");
    return Rational(n, d);
  }

  // Decimal or integer literal.
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0, dot = std::string_view::npos;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c == '.') {
      if (dot != std::string_view::npos) fail("two decimal points");
      dot = i;
    } else {
      fail("unexpected character (floats in exponent form are refused)");
    }
  }
  if (digits == 0) fail("no digits");

  // Accumulate digit runs by hand: the bignum string constructor would treat
  // a leading zero as a base prefix and choke on "0.09" style input.
  auto digit_run = [](std::string_view s) {
    Int v = 0;
    for (char c : s) {
      v *= 10;
      v += c - '0';
    }
    return v;
  };
  const bool neg = text[0] == '-';
  const std::size_t sign_len = (text[0] == '-' || text[0] == '+') ? 1 : 0;

  if (dot == std::string_view::npos) {
    const Int v = digit_run(text.substr(sign_len));
    return Rational(neg ? -v : v);
  }

  std::string_view mantissa = text.substr(sign_len, dot - sign_len);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty()) fail("digits required after decimal point");
  Int scale = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
  const Int num = digit_run(mantissa) * scale + digit_run(frac);
  return Rational(neg ? -num : num, scale);
}

// Canonical form: lowest terms, "p" when integral, "p/q" with q > 0 otherwise.
inline std::string format_rational(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) {
    s += '/';
    s += denominator(v).str();
  }
  return s;
}

struct RationalInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }

  RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RationalInterval& operator+=(const RationalInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  // Scaling by a nonnegative rational keeps the enclosure valid.
  RationalInterval scaled(const Rational& f) const { return {lo * f, hi * f}; }

  bool certainly_le(const RationalInterval& o) const { return hi <= o.lo; }
  bool certainly_gt(const RationalInterval& o) const { return lo > o.hi; }
};

// Rational enclosure of sqrt(v) with absolute width at most 2^-bits times a
// small constant.  Uses sqrt(p/q) = sqrt(p*q)/q and an exact integer floor
// square root, so both bounds are honest.
inline RationalInterval sqrt_interval(const Rational& v, unsigned bits) {
  if (sign_of(v) < 0) throw std::domain_error("sqrt_interval of negative value");
  if (v.is_zero()) return {Rational(0), Rational(0)};
  Int pq = numerator(v) * denominator(v);
  Int shifted = pq << (2 * bits);
  Int root = sqrt(shifted);  // floor square root
  Int den = denominator(v) << bits;
  return {Rational(root, den), Rational(root + 1, den)};
}

}  // namespace visroute
