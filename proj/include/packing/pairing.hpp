#pragma once

#include "packing/integer.hpp"

#include <cstddef>
#include <vector>

namespace packing {

struct Point2 {
  Nat x;
  Nat y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// A lattice point in N0^m, m >= 1.
struct PointM {
  std::vector<Nat> coords;

  std::size_t dim() const { return coords.size(); }

  friend bool operator==(const PointM&, const PointM&) = default;
};

namespace detail {

inline void require_point(const Point2& p) {
  require_nonnegative(p.x, "x");
  require_nonnegative(p.y, "y");
}

inline Nat triangular(const Nat& k) { return k * (k + 1) / 2; }

}  // namespace detail

/// First Cantor polynomial, ((x+y)^2 + x + 3y) / 2. Walks each diagonal x+y=k from (k,0) up to (0,k).
inline Nat cantor1(const Point2& p) {
  detail::require_point(p);
  Nat k = p.x + p.y;
  // k^2 + x + 3y = k(k+1) + 2y, always even.
  return (k * k + p.x + 3 * p.y) / 2;
}

/// Second Cantor polynomial: the transpose of cantor1.
inline Nat cantor2(const Point2& p) { return cantor1(Point2{p.y, p.x}); }

inline Point2 cantor1_inverse(const Nat& n) {
  require_nonnegative(n, "n");
  // Diagonal index: largest k with k(k+1)/2 <= n.
  Nat k = (isqrt(8 * n + 1) - 1) / 2;
  Nat y = n - detail::triangular(k);
  return Point2{k - y, y};
}

inline Point2 cantor2_inverse(const Nat& n) {
  Point2 p = cantor1_inverse(n);
  return Point2{p.y, p.x};
}

/// Left fold of cantor1 over the coordinates; the identity when m = 1.
inline Nat pack_m(const PointM& p) {
  if (p.coords.empty()) throw Error(Errc::InvalidDimension, "dimension must be at least 1");
  for (const Nat& c : p.coords) require_nonnegative(c, "coordinate");
  Nat acc = p.coords.front();
  for (std::size_t i = 1; i < p.coords.size(); ++i) acc = cantor1(Point2{acc, p.coords[i]});
  return acc;
}

inline PointM unpack_m(const Nat& n, std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidDimension, "dimension must be at least 1");
  require_nonnegative(n, "n");
  PointM out{std::vector<Nat>(m)};
  Nat rest = n;
  for (std::size_t i = m - 1; i > 0; --i) {
    Point2 split = cantor1_inverse(rest);
    out.coords[i] = split.y;
    rest = split.x;
  }
  out.coords[0] = rest;
  return out;
}

}  // namespace packing
