#pragma once

#include "packing/certificate.hpp"
#include "packing/integer.hpp"
#include "packing/numtheory.hpp"
#include "packing/quadratic.hpp"
#include "packing/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace packing {

struct ClassifyOptions {
  // Witness searches stop after this many anti-diagonals.
  std::uint64_t max_diagonal = 400;
  std::uint64_t prime_budget = kDefaultPrimeBudget;
};

/// Scans N0^2 in cantor1 order for the first defect: a non-integer or negative value, a
/// repeated value, or (when `bound` is given) a value below the frontier that nothing attains.
inline std::optional<Evidence> search_witness(const QuadPoly2& F, const std::optional<ShellLowerBound>& bound,
                                                 std::uint64_t max_diagonal) {
  std::map<Int, Point2> seen;
  Nat mex = 0;
  for (std::uint64_t t = 0; t < max_diagonal; ++t) {
    for (const Point2& p : diagonal_shell(t)) {
      Int twice = doubled_value(F, p.x, p.y);
      if (boost::multiprecision::bit_test(twice, 0)) {
        return StructuralFail{"F(x,y) is an integer", DefectKind::NonIntegerValue, p, twice};
      }
      if (twice.sign() < 0) return StructuralFail{"F(x,y) >= 0", DefectKind::NegativeValue, p, twice};
      Int value = twice / 2;
      auto [it, fresh] = seen.emplace(value, p);
      if (!fresh) {
        const Point2& first = it->second;
        return Collision{PointM{{first.x, first.y}}, PointM{{p.x, p.y}}, value};
      }
    }
    while (seen.contains(mex)) ++mex;
    if (!bound) continue;
    if (auto beyond = bound->min_from(t + 1); beyond && mex < *beyond) {
      Nat frontier = 0;
      while (*bound->min_from(frontier) <= mex) ++frontier;
      return Gap{mex, frontier, *bound->min_from(frontier)};
    }
  }
  return std::nullopt;
}

/// Modular obstruction for a non-square discriminant; requires a >= 1.
inline ModularGap modular_gap(const QuadPoly2& F, std::uint64_t prime_budget = kDefaultPrimeBudget) {
  SquareCompletion sc = square_completion(F);
  NonResidueCertificate cert = nonresidue_prime(sc.D, 8 * F.a, prime_budget);
  const Nat P = cert.p * cert.p;
  // Solve modulo p^2, not just p: only then does F = s (mod p) lift to F = s (mod p^2).
  Int inverse = *mod_inverse(sc.scale, P);
  return ModularGap{cert, mod_floor(sc.r * inverse, P)};
}

/// Decides whether F is one of the two Cantor polynomials and certifies the answer.
///
/// The stages follow the uniqueness argument: standard-form conditions, positivity of the
/// quadratic part, the modular obstruction for non-square b^2 - ac, and the forced
/// coefficients once b^2 - ac is a square. Anything left is refuted by a witness search.
inline Certificate classify(const QuadPoly2& F, const ClassifyOptions& options = {}) {
  if (!F.has_quadratic_part()) throw Error(Errc::NotQuadratic, "quadratic part of " + F.str() + " is zero");

  auto certify = [&F](Evidence evidence) { return Certificate{F, std::move(evidence)}; };

  ValidationReport report = validate(F);
  if (const ValidationEntry* failed = report.first_failure()) {
    if (auto found = search_witness(F, std::nullopt, options.max_diagonal)) {
      if (auto* defect = std::get_if<StructuralFail>(&*found)) defect->condition = failed->condition;
      return certify(*found);
    }
    if (auto direction = nonpositive_direction(F)) {
      return certify(StructuralFail{failed->condition, DefectKind::QuadraticPartNotPositive, *direction,
                                    doubled_quadratic_part(F, direction->x, direction->y)});
    }
    throw Error(Errc::SearchExhausted, "no witness for failed condition '" + failed->condition + "' of " + F.str());
  }

  if (!is_positive_definite_on_sector(F)) {
    if (auto found = search_witness(F, std::nullopt, options.max_diagonal)) return certify(*found);
    Point2 direction = *nonpositive_direction(F);
    return certify(StructuralFail{"Q positive-definite on N0^2 with a >= 1 and c >= 1",
                                  DefectKind::QuadraticPartNotPositive, direction,
                                  doubled_quadratic_part(F, direction.x, direction.y)});
  }

  const Int D = F.b * F.b - F.a * F.c;
  const std::optional<Nat> root = is_square(D);
  if (!root) return certify(modular_gap(F, options.prime_budget));

  // D = t^2 with 0 <= t < b <= 1 leaves b = 1, D = 0, a = c = 1; then d, e odd and distinct,
  // min(d, e) = 1, f = 0 and the remaining slope is 1, which pins both Cantor tuples.
  if (*root < F.b && F.b <= 1) {
    if (F == kCantor1) return certify(IsCantor1{});
    if (F == kCantor2) return certify(IsCantor2{});
  }

  if (auto found = search_witness(F, diagonal_shell_bound(F), options.max_diagonal)) return certify(*found);
  throw Error(Errc::SearchExhausted, "no collision or gap for " + F.str() + " within " +
                                         std::to_string(options.max_diagonal) + " diagonals");
}

/// A collision for the linear polynomial L on S = {x : min(x) >= ell}.
///
/// For a pair i < j with (a_i, a_j) != (0, 0), shifting by a_i e_j - a_j e_i leaves the value
/// unchanged; starting from min(x) >= ell + max|a_k| keeps both points inside S.
inline Certificate refute_linear(const std::vector<Int>& coeffs, const Int& constant, const Nat& ell) {
  if (coeffs.size() < 2) throw Error(Errc::DimensionTooSmall, "linear refutation needs at least two variables");
  require_nonnegative(ell, "ell");
  LinearPoly L{coeffs, constant, ell};
  const std::size_t m = coeffs.size();

  Nat spread = 0;
  for (const Int& a : coeffs) spread = std::max(spread, magnitude(a));
  PointM base{std::vector<Nat>(m, ell + spread)};

  PointM moved = base;
  if (spread == 0) {
    // Constant polynomial: any two points of S collide.
    moved.coords[0] += 1;
  } else {
    std::size_t i = 0;
    while (coeffs[i] == 0) ++i;
    std::size_t j = i == 0 ? 1 : 0;
    if (i > j) std::swap(i, j);
    // Now i < j and the pair contains a nonzero coefficient.
    moved.coords[j] += coeffs[i];
    moved.coords[i] -= coeffs[j];
  }
  Int value = L.eval(base);
  return Certificate{L, Collision{base, moved, value}};
}

struct SearchResult {
  QuadPoly2 polynomial;
  Certificate certificate;
  PackingVerdict verdict;
};

/// Classifies every standard-form quadratic with a, c, f in [0, B] and b, d, e in [-B, B]
/// satisfying the parity conditions, and returns those confirmed as packing polynomials,
/// each re-checked by brute force on `region_bound` anti-diagonals up to `value_bound`.
inline std::vector<SearchResult> search_quadratics(const Nat& coeff_bound, const Nat& region_bound,
                                                   const Nat& value_bound, const ClassifyOptions& options = {}) {
  require_nonnegative(coeff_bound, "coefficient bound");
  const Int lo = -coeff_bound, hi = coeff_bound;
  auto odd = [](const Int& n) { return boost::multiprecision::bit_test(n, 0); };
  std::vector<SearchResult> confirmed;
  for (Int a = 0; a <= hi; ++a)
    for (Int b = lo; b <= hi; ++b)
      for (Int c = 0; c <= hi; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        for (Int d = lo; d <= hi; ++d) {
          if (odd(a) != odd(d)) continue;
          for (Int e = lo; e <= hi; ++e) {
            if (odd(c) != odd(e)) continue;
            for (Int f = 0; f <= hi; ++f) {
              QuadPoly2 F{a, b, c, d, e, f};
              Certificate cert = classify(F, options);
              if (!is_confirmation(cert)) continue;
              PackingVerdict verdict = verify_quadratic_packing(F, region_bound, value_bound);
              if (!verdict.packing_on_range() || !verdict.frontier_closed) {
                throw std::logic_error("classifier confirmed " + F.str() + " but brute force disagrees");
              }
              confirmed.push_back(SearchResult{F, cert, verdict});
            }
          }
        }
      }
  std::sort(confirmed.begin(), confirmed.end(),
            [](const SearchResult& l, const SearchResult& r) { return l.polynomial < r.polynomial; });
  return confirmed;
}

}  // namespace packing
