#pragma once

#include "packing/integer.hpp"
#include "packing/pairing.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace packing {

/// F(x,y) = (a x^2 + 2b xy + c y^2)/2 + (d x + e y)/2 + f.
///
/// Any integer tuple is representable; `validate` decides whether it is in the
/// shape every quadratic packing polynomial must take.
struct QuadPoly2 {
  Int a, b, c, d, e, f;

  auto tie() const { return std::tie(a, b, c, d, e, f); }

  friend bool operator==(const QuadPoly2& l, const QuadPoly2& r) { return l.tie() == r.tie(); }
  friend bool operator<(const QuadPoly2& l, const QuadPoly2& r) { return l.tie() < r.tie(); }

  bool has_quadratic_part() const { return a != 0 || b != 0 || c != 0; }

  std::string str() const {
    return "(" + a.str() + "," + b.str() + "," + c.str() + "," + d.str() + "," + e.str() + "," + f.str() + ")";
  }
};

inline const QuadPoly2 kCantor1{1, 1, 1, 1, 3, 0};
inline const QuadPoly2 kCantor2{1, 1, 1, 3, 1, 0};

/// 2 F(x,y) as an exact integer; valid for arbitrary integer (x, y).
inline Int doubled_value(const QuadPoly2& F, const Int& x, const Int& y) {
  return F.a * x * x + 2 * F.b * x * y + F.c * y * y + F.d * x + F.e * y + 2 * F.f;
}

/// 2 Q(x,y) = a x^2 + 2b xy + c y^2.
inline Int doubled_quadratic_part(const QuadPoly2& F, const Int& x, const Int& y) {
  return F.a * x * x + 2 * F.b * x * y + F.c * y * y;
}

inline Int eval(const QuadPoly2& F, const Point2& p) {
  detail::require_point(p);
  Int twice = doubled_value(F, p.x, p.y);
  if (boost::multiprecision::bit_test(twice, 0)) {
    throw Error(Errc::OddNumerator, "F" + F.str() + " is not an integer at (" + p.x.str() + "," + p.y.str() + ")");
  }
  return twice / 2;
}

struct ValidationEntry {
  std::string condition;
  bool passed;
  // The identity through which a packing polynomial's values force the condition.
  std::string identity;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  bool passed() const {
    for (const auto& entry : entries)
      if (!entry.passed) return false;
    return true;
  }

  const ValidationEntry* first_failure() const {
    for (const auto& entry : entries)
      if (!entry.passed) return &entry;
    return nullptr;
  }
};

inline ValidationReport validate(const QuadPoly2& F) {
  auto odd = [](const Int& n) { return boost::multiprecision::bit_test(n, 0); };
  ValidationReport report;
  report.entries = {
      {"a >= 0", F.a.sign() >= 0, "a = F(2,0) - 2F(1,0) + F(0,0), and F(x,0) = a x^2/2 + d x/2 + f >= 0 for all x"},
      {"c >= 0", F.c.sign() >= 0, "c = F(0,2) - 2F(0,1) + F(0,0), and F(0,y) = c y^2/2 + e y/2 + f >= 0 for all y"},
      {"f >= 0", F.f.sign() >= 0, "f = F(0,0)"},
      {"a = d (mod 2)", odd(F.a) == odd(F.d), "F(1,0) - F(0,0) = (a+d)/2 is an integer"},
      {"c = e (mod 2)", odd(F.c) == odd(F.e), "F(0,1) - F(0,0) = (c+e)/2 is an integer"},
      {"(a,b,c) != (0,0,0)", F.has_quadratic_part(), "F is quadratic"},
      {"a = c = 0 implies b >= 1", !(F.a == 0 && F.c == 0) || F.b >= 1,
       "F(x,x) = b x^2 + (d+e) x/2 + f >= 0 for all x"},
  };
  return report;
}

/// Whether Q(x,y) > 0 on the closed first quadrant minus the origin.
inline bool is_positive_definite_on_sector(const QuadPoly2& F) {
  if (F.a < 1 || F.c < 1) return false;
  return F.b.sign() >= 0 || F.b * F.b < F.a * F.c;
}

/// A point of N0^2 \ {0} where Q <= 0, or nullopt when Q is positive there.
inline std::optional<Point2> nonpositive_direction(const QuadPoly2& F) {
  if (F.a <= 0) return Point2{1, 0};
  if (F.c <= 0) return Point2{0, 1};
  if (F.b.sign() < 0 && F.b * F.b >= F.a * F.c) {
    // Q(c, -b) = c (ac - b^2) / 2 <= 0; reported as a primitive direction.
    Nat g = boost::multiprecision::gcd(F.c, Int(-F.b));
    return Point2{F.c / g, -F.b / g};
  }
  return std::nullopt;
}

/// 8aD F(x,y) = D u^2 - v^2 + r, with u = 2ax + 2by + d and v = 2Dy + bd - ae.
struct SquareCompletion {
  Int D;
  Int r;
  Int u_x, u_y, u_0;
  Int v_y, v_0;
  Int scale;  // 8aD

  Int u(const Int& x, const Int& y) const { return u_x * x + u_y * y + u_0; }
  Int v(const Int& y) const { return v_y * y + v_0; }
};

inline SquareCompletion square_completion(const QuadPoly2& F) {
  SquareCompletion sc;
  sc.D = F.b * F.b - F.a * F.c;
  Int shift = F.b * F.d - F.a * F.e;
  sc.r = shift * shift - sc.D * F.d * F.d + 8 * F.a * sc.D * F.f;
  sc.u_x = 2 * F.a;
  sc.u_y = 2 * F.b;
  sc.u_0 = F.d;
  sc.v_y = 2 * sc.D;
  sc.v_0 = shift;
  sc.scale = 8 * F.a * sc.D;
  return sc;
}

/// Lattice-point counts of the five regions that hold every point with F < 288 m^2
/// when b >= 2 and m >= max(2, |d|, |e|).
struct RegionCounts {
  Nat m;
  Nat n1, n2, n3, n4, n5;

  Nat total() const { return n1 + n2 + n3 + n4 + n5; }

  friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

inline void require_region_m(const Nat& m) {
  if (m < 2) throw Error(Errc::InvalidM, "m must be at least 2, got " + m.str());
}

inline RegionCounts region_counts(const Nat& m) {
  require_region_m(m);
  Nat m2 = m * m;
  return RegionCounts{m, 25 * m2, (333 * m2 + 9 * m) / 2, 40 * m2, (99 * m2 + 9 * m) / 2, 2 * m2};
}

/// Point-by-point count of the same regions. Z3 and Z4 start at x = 10m and x = 14m.
inline RegionCounts region_counts_bruteforce(const Nat& m) {
  require_region_m(m);
  auto count = [](const Nat& x_lo, const Nat& x_hi, auto&& y_limit) {
    Nat n = 0;
    for (Nat x = x_lo; x < x_hi; ++x) {
      for (Nat y = 0; y < y_limit(x); ++y) ++n;
    }
    return n;
  };
  auto flat = [](Nat h) { return [h](const Nat&) { return h; }; };
  auto slanted = [&m](const Nat& x) { return Nat(24 * m - x); };
  return RegionCounts{m,
                      count(0, m, flat(25 * m)),
                      count(m, 10 * m, slanted),
                      count(10 * m, 14 * m, flat(10 * m)),
                      count(14 * m, 23 * m, slanted),
                      count(23 * m, 25 * m, flat(m))};
}

/// Lower bound for F on lattice shells {t * w(lambda)}, w(lambda) = p0 + lambda (p1 - p0), lambda in [0,1].
///
/// On shell t every point satisfies F >= quad t^2 + lin t + constant, where quad and lin are the
/// minima of Q and L over the direction segment. With quad > 0 the bound grows without limit,
/// which is what lets a finite box certify surjectivity or a gap.
struct ShellLowerBound {
  Rational quad;
  Rational lin;
  Rational constant;

  bool grows() const { return quad > 0; }

  Rational at(const Int& t) const { return quad * t * t + lin * t + constant; }

  /// ceil(min over integer t >= from of the bound); nullopt when the bound does not grow.
  std::optional<Int> min_from(const Nat& from) const {
    if (!grows()) return std::nullopt;
    Rational vertex = -lin / (2 * quad);
    Int t = from;
    if (Rational(from) < vertex) {
      Int lo = floor_rational(vertex);
      Rational best = at(lo + 1);
      if (lo >= from) {
        Rational alt = at(lo);
        if (alt < best) best = alt;
      }
      return ceil_rational(best);
    }
    return ceil_rational(at(t));
  }
};

namespace detail {

inline ShellLowerBound shell_bound(const QuadPoly2& F, const Rational& p0x, const Rational& p0y, const Rational& p1x,
                                   const Rational& p1y) {
  // Q(w(lambda)) = alpha lambda^2 + beta lambda + gamma.
  Rational dx = p1x - p0x, dy = p1y - p0y;
  Rational a(F.a), b(F.b), c(F.c);
  Rational alpha = (a * dx * dx + 2 * b * dx * dy + c * dy * dy) / 2;
  Rational beta = a * p0x * dx + b * (p0x * dy + p0y * dx) + c * p0y * dy;
  Rational gamma = (a * p0x * p0x + 2 * b * p0x * p0y + c * p0y * p0y) / 2;
  auto q = [&](const Rational& l) { return (alpha * l + beta) * l + gamma; };

  Rational quad = q(0) < q(1) ? q(0) : q(1);
  if (alpha > 0) {
    Rational star = -beta / (2 * alpha);
    if (star > 0 && star < 1 && q(star) < quad) quad = q(star);
  }
  Rational l0 = (Rational(F.d) * p0x + Rational(F.e) * p0y) / 2;
  Rational l1 = (Rational(F.d) * p1x + Rational(F.e) * p1y) / 2;
  return ShellLowerBound{quad, l0 < l1 ? l0 : l1, Rational(F.f)};
}

}  // namespace detail

/// Shells are the anti-diagonals x + y = t of N0^2.
inline ShellLowerBound diagonal_shell_bound(const QuadPoly2& F) { return detail::shell_bound(F, 1, 0, 0, 1); }

/// Shells are the columns x = t of the sector 0 <= y <= (r/s) x.
inline ShellLowerBound column_shell_bound(const QuadPoly2& F, const Nat& r, const Nat& s) {
  return detail::shell_bound(F, 1, 0, 1, Rational(r, s));
}

/// Points of the anti-diagonal x + y = t, in the order cantor1 numbers them.
inline std::vector<Point2> diagonal_shell(const Nat& t) {
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  for (Nat y = 0; y <= t; ++y) out.push_back(Point2{t - y, y});
  return out;
}

}  // namespace packing
