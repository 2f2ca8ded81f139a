#pragma once

#include "packing/integer.hpp"
#include "packing/pairing.hpp"
#include "packing/quadratic.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace packing {

/// Result of a finite packing check.
///
/// Values in [0, covered_upto] are certified: any point outside the enumerated box
/// takes a value >= frontier_min > covered_upto. `gaps` lists the certified values no
/// point attains. covered_upto is -1 when nothing could be certified.
struct PackingVerdict {
  bool injective_on_box = true;
  std::optional<std::pair<Point2, Point2>> collision;
  std::optional<Point2> negative_at;
  Int covered_upto = -1;
  std::vector<Nat> gaps;
  Nat frontier_bound_used = 0;       // number of shells enumerated
  std::optional<Int> frontier_min;   // lower bound for every point beyond them
  bool frontier_closed = false;      // frontier_min exceeded the requested value bound
  std::size_t points_checked = 0;

  /// A packing function restricted to the certified range.
  bool packing_on_range() const {
    return injective_on_box && !negative_at && gaps.empty() && covered_upto >= 0;
  }
};

/// Enumerates shells 0..box_bound-1 of a domain, checks the values are pairwise distinct and
/// nonnegative, and lists unattained values up to min(value_bound, frontier_min - 1).
///
/// `shell(t)` yields the domain points of shell t; `bound.min_from(t)` must lower-bound the
/// evaluator on every shell >= t. With no value_bound, the frontier alone sets the range.
template <class Evaluator, class ShellFn>
PackingVerdict verify_packing_bruteforce(Evaluator&& evaluate, ShellFn&& shell, const ShellLowerBound& bound,
                                         const Nat& box_bound, const std::optional<Nat>& value_bound = std::nullopt) {
  PackingVerdict verdict;
  verdict.frontier_bound_used = box_bound;
  verdict.frontier_min = bound.min_from(box_bound);
  if (verdict.frontier_min) {
    verdict.covered_upto = *verdict.frontier_min - 1;
    if (value_bound && *value_bound <= verdict.covered_upto) {
      verdict.covered_upto = *value_bound;
      verdict.frontier_closed = true;
    } else if (!value_bound) {
      verdict.frontier_closed = true;
    }
  }
  if (verdict.covered_upto < -1) verdict.covered_upto = -1;

  std::vector<char> hit(static_cast<std::size_t>(verdict.covered_upto + 1), 0);
  std::map<Int, Point2> seen;
  for (Nat t = 0; t < box_bound; ++t) {
    for (const Point2& p : shell(t)) {
      ++verdict.points_checked;
      Int value = evaluate(p);
      if (value.sign() < 0 && !verdict.negative_at) verdict.negative_at = p;
      auto [it, fresh] = seen.emplace(value, p);
      if (!fresh && verdict.injective_on_box) {
        verdict.injective_on_box = false;
        verdict.collision = std::make_pair(it->second, p);
      }
      if (value.sign() >= 0 && value <= verdict.covered_upto) hit[static_cast<std::size_t>(value)] = 1;
    }
  }
  for (std::size_t v = 0; v < hit.size(); ++v) {
    if (!hit[v]) verdict.gaps.emplace_back(v);
  }
  return verdict;
}

/// Packing check of a standard-form quadratic on the first `diagonals` anti-diagonals of N0^2.
inline PackingVerdict verify_quadratic_packing(const QuadPoly2& F, const Nat& diagonals,
                                               const std::optional<Nat>& value_bound = std::nullopt) {
  return verify_packing_bruteforce([&F](const Point2& p) { return eval(F, p); }, diagonal_shell,
                                   diagonal_shell_bound(F), diagonals, value_bound);
}

}  // namespace packing
