#pragma once

// Seeded random instances.  Coordinates are dyadic rationals k / 2^20 drawn
// uniformly from the unit square, resampled wholesale until the point set
// passes the general-position validator.  Constraints are sampled by running
// a greedy non-crossing pass over a shuffled list of all vertex pairs; the
// `density` knob keeps a prefix of that maximal set, so 0 means none and 1
// means a maximal greedy set.
//
// All randomness flows through one mt19937_64 plus explicit masking /
// Fisher-Yates, so a (seed, parameters) pair reproduces the instance bit for
// bit on any platform.

#include "visroute/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace visroute {

struct GenParams {
  std::size_t n = 10;
  double density = 0.0;  // fraction of a greedy maximal non-crossing constraint set
  std::uint64_t seed = 0;
  unsigned coord_bits = 20;  // coordinates are k / 2^coord_bits
};

namespace detail {

template <class Rng>
std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  // n is tiny compared to 2^64; modulo bias is irrelevant here, and this
  // stays identical across standard library implementations.
  return rng() % n;
}

template <class Rng, class T>
void shuffle_portable(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

}  // namespace detail

inline Instance generate_random_instance(const GenParams& prm) {
  if (prm.n == 0) throw std::invalid_argument("cannot generate an empty instance");
  if (prm.density < 0.0 || prm.density > 1.0)
    throw std::invalid_argument("constraint density must lie in [0, 1]");
  std::mt19937_64 rng(prm.seed);
  const std::uint64_t scale = std::uint64_t(1) << prm.coord_bits;
  const Rational denom = Rational(Int(scale));

  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(prm.n);
    for (std::size_t i = 0; i < prm.n; ++i) {
      const std::uint64_t xk = rng() & (scale - 1);
      const std::uint64_t yk = rng() & (scale - 1);
      pts.push_back(Point{std::int64_t(i), Rational(Int(xk)) / denom, Rational(Int(yk)) / denom});
    }
    {
      std::vector<Vec2R> ps;
      std::vector<std::int64_t> ids;
      for (const auto& p : pts) {
        ps.push_back(p.pos());
        ids.push_back(p.id);
      }
      if (!validate_general_position(ps, ids).ok()) continue;
    }

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t i = 0; i < prm.n; ++i)
      for (std::size_t j = i + 1; j < prm.n; ++j) pairs.emplace_back(pts[i].id, pts[j].id);
    detail::shuffle_portable(pairs, rng);

    // Greedy maximal non-crossing set, then the density prefix of it.
    std::vector<std::pair<std::int64_t, std::int64_t>> accepted;
    if (prm.density > 0.0) {
      std::vector<std::pair<Vec2R, Vec2R>> segs;
      for (const auto& [a, b] : pairs) {
        const Vec2R pa = pts[std::size_t(a)].pos(), pb = pts[std::size_t(b)].pos();
        bool ok = true;
        for (const auto& [qa, qb] : segs)
          if (properly_intersects(pa, pb, qa, qb)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        accepted.emplace_back(a, b);
        segs.emplace_back(pa, pb);
      }
      const std::size_t keep =
          std::size_t(std::llround(prm.density * double(accepted.size())));
      accepted.resize(std::min(keep, accepted.size()));
    }

    try {
      return Instance(pts, accepted, Validation::full);
    } catch (const ValidationError&) {
      continue;  // pathological interaction; resample
    }
  }
  throw std::runtime_error("failed to sample a valid instance in 256 attempts");
}

}  // namespace visroute
