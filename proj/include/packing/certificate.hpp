#pragma once

#include "packing/integer.hpp"
#include "packing/numtheory.hpp"
#include "packing/pairing.hpp"
#include "packing/quadratic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace packing {

/// Linear polynomial sum_i coeffs[i] * x_i + constant on S = {x in N0^m : min(x) >= ell}.
struct LinearPoly {
  std::vector<Int> coeffs;
  Int constant;
  Nat ell;

  Int eval(const PointM& x) const {
    if (x.dim() != coeffs.size()) throw Error(Errc::InvalidDimension, "point dimension does not match polynomial");
    Int value = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) value += coeffs[i] * x.coords[i];
    return value;
  }

  friend bool operator==(const LinearPoly&, const LinearPoly&) = default;

  bool contains(const PointM& x) const {
    if (x.dim() != coeffs.size()) return false;
    for (const Nat& c : x.coords)
      if (c < ell) return false;
    return true;
  }
};

/// Two distinct points with the same value: the map is not injective.
struct Collision {
  PointM p1;
  PointM p2;
  Int value;

  friend bool operator==(const Collision&, const Collision&) = default;
};

/// g is attained nowhere: no point with x + y < frontier_diagonal takes it, and every
/// point beyond takes at least frontier_min > g. frontier_diagonal is the smallest
/// shell index for which the growth bound clears g.
struct Gap {
  Nat g;
  Nat frontier_diagonal;
  Int frontier_min;

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// With D a non-residue mod p and 8aD s = r (mod p^2), F = s (mod p) forces F = s (mod p^2),
/// so no lattice point takes a value congruent to s + p modulo p^2.
struct ModularGap {
  NonResidueCertificate cert;
  Nat s;

  Nat unattained_value() const { return s + cert.p; }

  friend bool operator==(const ModularGap&, const ModularGap&) = default;
};

enum class DefectKind {
  NonIntegerValue,          // 2F odd at the witness
  NegativeValue,            // F < 0 at the witness
  QuadraticPartNotPositive  // 2Q <= 0 at a nonzero witness
};

inline const char* defect_name(DefectKind kind) {
  switch (kind) {
    case DefectKind::NonIntegerValue: return "non-integer-value";
    case DefectKind::NegativeValue: return "negative-value";
    case DefectKind::QuadraticPartNotPositive: return "quadratic-part-not-positive";
  }
  return "unknown";
}

/// A structural condition fails, exhibited at a single point. doubled_value is 2F(witness)
/// for value defects and 2Q(witness) for the quadratic-part defect.
struct StructuralFail {
  std::string condition;
  DefectKind kind;
  Point2 witness;
  Int doubled_value;

  friend bool operator==(const StructuralFail&, const StructuralFail&) = default;
};

struct IsCantor1 {
  friend bool operator==(const IsCantor1&, const IsCantor1&) = default;
};
struct IsCantor2 {
  friend bool operator==(const IsCantor2&, const IsCantor2&) = default;
};

using Evidence = std::variant<Collision, Gap, ModularGap, StructuralFail, IsCantor1, IsCantor2>;
using Subject = std::variant<QuadPoly2, LinearPoly>;

/// Evidence bound to the polynomial it was produced for; a certificate presented with any
/// other polynomial does not verify.
struct Certificate {
  Subject subject;
  Evidence evidence;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline bool is_confirmation(const Certificate& cert) {
  return std::holds_alternative<IsCantor1>(cert.evidence) || std::holds_alternative<IsCantor2>(cert.evidence);
}

inline const char* certificate_name(const Certificate& cert) {
  static constexpr const char* names[] = {"Collision", "Gap", "ModularGap", "StructuralFail", "IsCantor1", "IsCantor2"};
  return names[cert.evidence.index()];
}

/// Side of the box [0, side)^2 the modular check scans when p^2 is larger.
inline constexpr std::uint64_t kModularCheckSide = 201;

namespace detail {

inline Point2 as_point2(const PointM& p) {
  if (p.dim() != 2) throw Error(Errc::InvalidDimension, "expected a planar point");
  return Point2{p.coords[0], p.coords[1]};
}

inline bool check_collision(const QuadPoly2& F, const Collision& cert) {
  Point2 p1 = as_point2(cert.p1), p2 = as_point2(cert.p2);
  if (p1 == p2) return false;
  if (eval(F, p1) != cert.value || eval(F, p2) != cert.value) return false;
  // The pair is also the first repeat in cantor1 order: p2 is the earliest point whose value
  // occurred before, and p1 is where it occurred. A genuine p2 bounds the scan.
  std::map<Int, Point2> seen;
  for (Nat t = 0; t <= p2.x + p2.y; ++t) {
    for (const Point2& p : diagonal_shell(t)) {
      auto [it, fresh] = seen.emplace(doubled_value(F, p.x, p.y), p);
      if (!fresh) return it->second == p1 && p == p2;
      if (p == p2) return false;
    }
  }
  return false;
}

inline bool check_gap(const QuadPoly2& F, const Gap& cert) {
  require_nonnegative(cert.g, "gap value");
  require_nonnegative(cert.frontier_diagonal, "frontier diagonal");
  ShellLowerBound bound = diagonal_shell_bound(F);
  std::optional<Int> beyond = bound.min_from(cert.frontier_diagonal);
  if (!beyond || *beyond != cert.frontier_min || cert.frontier_min <= cert.g) return false;
  if (cert.frontier_diagonal > 0 && *bound.min_from(cert.frontier_diagonal - 1) > cert.g) return false;
  // g is also the least unattained value: everything below it shows up inside the box.
  const Nat& T = cert.frontier_diagonal;
  if (cert.g > T * (T + 1) / 2) return false;
  std::vector<char> below(static_cast<std::size_t>(cert.g), 0);
  for (Nat t = 0; t < T; ++t) {
    for (const Point2& p : diagonal_shell(t)) {
      Int twice = doubled_value(F, p.x, p.y);
      if (twice == 2 * cert.g) return false;
      if (twice.sign() >= 0 && twice < 2 * cert.g && !boost::multiprecision::bit_test(twice, 0)) {
        below[static_cast<std::size_t>(twice / 2)] = 1;
      }
    }
  }
  return std::find(below.begin(), below.end(), 0) == below.end();
}

/// Scans 2F mod p^2 over [0, side)^2 for the residue 2(s + p). When side >= p^2 this is every
/// residue class of (x, y), hence a complete check.
inline bool modular_residue_absent(const QuadPoly2& F, const Nat& p, const Nat& s, std::uint64_t side) {
  const Nat P = p * p;
  const Nat target = mod_floor(2 * (s + p), P);
  if (P < (Nat(1) << 31)) {
    using u64 = std::uint64_t;
    const u64 mod = static_cast<u64>(P);
    auto red = [&](const Int& v) { return static_cast<u64>(mod_floor(v, P)); };
    const u64 a = red(F.a), b2 = red(2 * F.b), c = red(F.c), d = red(F.d), e = red(F.e), f2 = red(2 * F.f);
    const u64 want = static_cast<u64>(target);
    for (u64 x = 0; x < side; ++x) {
      const u64 xm = x % mod;
      for (u64 y = 0; y < side; ++y) {
        const u64 ym = y % mod;
        // ((a x + 2b y + d) x + (c y + e) y + 2f) mod p^2
        u64 n = ((a * xm + b2 * ym + d) % mod) * xm % mod;
        n = (n + ((c * ym + e) % mod) * ym + f2) % mod;
        if (n == want) return false;
      }
    }
    return true;
  }
  for (Nat x = 0; x < side; ++x) {
    for (Nat y = 0; y < side; ++y) {
      if (mod_floor(doubled_value(F, x, y), P) == target) return false;
    }
  }
  return true;
}

inline bool check_modular_gap(const QuadPoly2& F, const ModularGap& cert) {
  const Nat& p = cert.cert.p;
  if (F.a < 1) return false;
  SquareCompletion sc = square_completion(F);
  if (cert.cert.D != sc.D || cert.cert.ell != 8 * F.a) return false;
  if (!check_nonresidue_certificate(cert.cert)) return false;
  if (gcd(sc.scale, p) != 1) return false;
  const Nat P = p * p;
  if (cert.s.sign() < 0 || cert.s >= P) return false;
  if (mod_floor(sc.scale * cert.s - sc.r, P) != 0) return false;
  std::uint64_t side = P < kModularCheckSide ? static_cast<std::uint64_t>(P) : kModularCheckSide;
  return modular_residue_absent(F, p, cert.s, side);
}

inline bool check_structural_fail(const QuadPoly2& F, const StructuralFail& cert) {
  detail::require_point(cert.witness);
  const Point2& w = cert.witness;
  switch (cert.kind) {
    case DefectKind::NonIntegerValue: {
      Int twice = doubled_value(F, w.x, w.y);
      return twice == cert.doubled_value && boost::multiprecision::bit_test(twice, 0);
    }
    case DefectKind::NegativeValue: {
      Int twice = doubled_value(F, w.x, w.y);
      return twice == cert.doubled_value && !boost::multiprecision::bit_test(twice, 0) && twice.sign() < 0;
    }
    case DefectKind::QuadraticPartNotPositive: {
      if (gcd(w.x, w.y) != 1) return false;  // a primitive direction
      Int q = doubled_quadratic_part(F, w.x, w.y);
      return q == cert.doubled_value && q.sign() <= 0;
    }
  }
  return false;
}

}  // namespace detail

/// Re-checks a certificate against F from scratch. Never throws; any inconsistency is `false`.
inline bool verify_certificate(const QuadPoly2& F, const Certificate& cert) {
  try {
    const auto* subject = std::get_if<QuadPoly2>(&cert.subject);
    if (!subject || *subject != F) return false;
    return std::visit(
        [&F](const auto& c) -> bool {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Collision>) return detail::check_collision(F, c);
          if constexpr (std::is_same_v<T, Gap>) return detail::check_gap(F, c);
          if constexpr (std::is_same_v<T, ModularGap>) return detail::check_modular_gap(F, c);
          if constexpr (std::is_same_v<T, StructuralFail>) return detail::check_structural_fail(F, c);
          if constexpr (std::is_same_v<T, IsCantor1>) return F == kCantor1;
          if constexpr (std::is_same_v<T, IsCantor2>) return F == kCantor2;
        },
        cert.evidence);
  } catch (const std::exception&) {
    return false;
  }
}

inline bool verify_linear_collision(const LinearPoly& L, const Certificate& cert) {
  try {
    const auto* subject = std::get_if<LinearPoly>(&cert.subject);
    if (!subject || *subject != L) return false;
    const auto* c = std::get_if<Collision>(&cert.evidence);
    if (!c || c->p1 == c->p2) return false;
    if (!L.contains(c->p1) || !L.contains(c->p2)) return false;
    return L.eval(c->p1) == c->value && L.eval(c->p2) == c->value;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace packing
