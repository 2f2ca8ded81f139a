#pragma once

#include "packing/integer.hpp"
#include "packing/numtheory.hpp"
#include "packing/pairing.hpp"
#include "packing/quadratic.hpp"
#include "packing/verify.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace packing {

/// The integer sector {(x, y) : 0 <= y <= (r/s) x} with gcd(r, s) = 1, 1 <= r < s, r | s - 1.
class SectorSpec {
 public:
  SectorSpec(const Nat& r, const Nat& s) : r_(r), s_(s) {
    if (r < 1 || r >= s) throw Error(Errc::InvalidSector, "need 1 <= r < s, got r=" + r.str() + " s=" + s.str());
    if (gcd(r, s) != 1) throw Error(Errc::InvalidSector, "r and s must be coprime");
    if ((s - 1) % r != 0) throw Error(Errc::InvalidSector, "r must divide s - 1");
    d_ = (s - 1) / r;
  }

  const Nat& r() const { return r_; }
  const Nat& s() const { return s_; }
  const Nat& d() const { return d_; }

  bool contains(const Nat& x, const Nat& y) const { return x.sign() >= 0 && y.sign() >= 0 && s_ * y <= r_ * x; }

  /// Largest y with (x, y) in the sector.
  Nat column_height(const Nat& x) const { return r_ * x / s_; }

 private:
  Nat r_, s_, d_;
};

enum class SectorVariant { F, G };

inline bool sector_contains(const SectorSpec& spec, const Nat& x, const Nat& y) { return spec.contains(x, y); }

namespace detail {

inline Int sector_numerator(const SectorSpec& spec, SectorVariant which, const Point2& p) {
  const Nat &r = spec.r(), &s = spec.s(), &d = spec.d();
  Int w = p.x - d * p.y;
  Int square = r * w * w;
  if (which == SectorVariant::F) return square + (2 - r) * p.x + (d * r - 2 * d + 2) * p.y;
  return square + (r + 2) * p.x - (2 * d + s + 1) * p.y;
}

inline Nat sector_value(const SectorSpec& spec, SectorVariant which, const Point2& p) {
  if (!spec.contains(p.x, p.y)) {
    throw Error(Errc::NotInSector, "(" + p.x.str() + "," + p.y.str() + ") is outside the sector");
  }
  Int twice = sector_numerator(spec, which, p);
  if (boost::multiprecision::bit_test(twice, 0)) {
    throw Error(Errc::OddNumerator, "sector polynomial is not an integer at (" + p.x.str() + "," + p.y.str() + ")");
  }
  return twice / 2;
}

}  // namespace detail

/// F_{r/s}(x,y) = r(x - dy)^2/2 + ((2 - r)x + (dr - 2d + 2)y)/2.
inline Nat sector_F(const SectorSpec& spec, const Point2& p) { return detail::sector_value(spec, SectorVariant::F, p); }

/// G_{r/s}(x,y) = r(x - dy)^2/2 + ((r + 2)x - (2d + s + 1)y)/2.
inline Nat sector_G(const SectorSpec& spec, const Point2& p) { return detail::sector_value(spec, SectorVariant::G, p); }

inline Nat sector_eval(const SectorSpec& spec, SectorVariant which, const Point2& p) {
  return detail::sector_value(spec, which, p);
}

/// The same polynomial written in standard form (a, b, c, d, e, f).
inline QuadPoly2 sector_polynomial(const SectorSpec& spec, SectorVariant which) {
  const Nat &r = spec.r(), &s = spec.s(), &d = spec.d();
  if (which == SectorVariant::F) return QuadPoly2{r, -r * d, r * d * d, 2 - r, d * r - 2 * d + 2, 0};
  return QuadPoly2{r, -r * d, r * d * d, r + 2, -(2 * d + s + 1), 0};
}

inline std::vector<Point2> sector_column(const SectorSpec& spec, const Nat& x) {
  std::vector<Point2> out;
  Nat height = spec.column_height(x);
  out.reserve(static_cast<std::size_t>(height) + 1);
  for (Nat y = 0; y <= height; ++y) out.push_back(Point2{x, y});
  return out;
}

/// First `count` sector points, by ascending x then ascending y.
inline std::vector<Point2> sector_enumerate(const SectorSpec& spec, std::size_t count) {
  std::vector<Point2> out;
  out.reserve(count);
  for (Nat x = 0; out.size() < count; ++x) {
    for (Nat y = 0; y <= spec.column_height(x) && out.size() < count; ++y) out.push_back(Point2{x, y});
  }
  return out;
}

/// Number of whole columns needed to cover the first `count` sector points.
inline Nat sector_columns_covering(const SectorSpec& spec, std::size_t count) {
  Nat columns = 0;
  Nat seen = 0;
  while (seen < count) {
    seen += spec.column_height(columns) + 1;
    ++columns;
  }
  return columns;
}

inline ShellLowerBound sector_column_bound(const SectorSpec& spec, SectorVariant which) {
  return column_shell_bound(sector_polynomial(spec, which), spec.r(), spec.s());
}

/// The sector point with value n, scanning columns until the frontier bound passes n.
/// In each column the value is a quadratic in y, so candidate rows come from its exact roots.
inline Point2 sector_unpack(const SectorSpec& spec, SectorVariant which, const Nat& n) {
  require_nonnegative(n, "n");
  const ShellLowerBound bound = sector_column_bound(spec, which);
  const QuadPoly2 P = sector_polynomial(spec, which);
  // 2 * value(x, y) - 2n = A y^2 + B(x) y + C(x).
  const Int A = P.c;
  for (Nat x = 0;; ++x) {
    std::optional<Int> beyond = bound.min_from(x);
    if (!beyond) throw std::logic_error("sector polynomial has no growth bound");
    if (*beyond > n) break;
    Int B = 2 * P.b * x + P.e;
    Int C = P.a * x * x + P.d * x - 2 * n;
    Int disc = B * B - 4 * A * C;
    if (disc.sign() < 0) continue;
    std::optional<Nat> root = is_square(disc);
    if (!root) continue;
    for (const Int& numer : {Int(-B - *root), Int(-B + *root)}) {
      if (numer.sign() < 0 || numer % (2 * A) != 0) continue;
      Nat y = numer / (2 * A);
      if (y <= spec.column_height(x)) return Point2{x, y};
    }
  }
  throw Error(Errc::SearchExhausted, "no sector point maps to " + n.str() + " although the frontier bound closed");
}

/// Packing check on the columns covering the first `points` sector points.
inline PackingVerdict verify_sector_packing(const SectorSpec& spec, SectorVariant which, std::size_t points,
                                            const std::optional<Nat>& value_bound = std::nullopt) {
  return verify_packing_bruteforce([&](const Point2& p) { return sector_eval(spec, which, p); },
                                   [&](const Nat& x) { return sector_column(spec, x); },
                                   sector_column_bound(spec, which), sector_columns_covering(spec, points),
                                   value_bound);
}

}  // namespace packing
