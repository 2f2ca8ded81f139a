#pragma once

#include "packing/integer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace packing {

inline constexpr std::uint64_t kDefaultPrimeBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultTrialDivisionBound = 10'000'000;

namespace detail {

inline constexpr std::array<unsigned, 12> kMillerRabinBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline bool strong_probable_prime(const Nat& n, const Nat& odd_part, unsigned twos, unsigned base) {
  Nat x = boost::multiprecision::powm(Nat(base), odd_part, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Miller-Rabin over the first twelve prime bases; deterministic for n < 3.18e23,
/// far beyond anything the progression searches here can reach within budget.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned q : detail::kMillerRabinBases) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  Nat odd_part = n - 1;
  unsigned twos = 0;
  while (!boost::multiprecision::bit_test(odd_part, 0)) {
    odd_part >>= 1;
    ++twos;
  }
  for (unsigned base : detail::kMillerRabinBases) {
    if (!detail::strong_probable_prime(n, odd_part, twos, base)) return false;
  }
  return true;
}

/// Extended Euclid: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
inline Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int x, y;
  return extended_gcd(a, b, x, y);
}

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  if (extended_gcd(mod_floor(a, m), m, x, y) != 1) return std::nullopt;
  return mod_floor(x, m);
}

/// The Legendre symbol (a/p) via the reciprocity-driven Jacobi recursion.
inline int legendre(const Int& a, const Nat& p) {
  if (p < 3 || !boost::multiprecision::bit_test(p, 0) || !is_prime(p)) {
    throw Error(Errc::NotOddPrime, "legendre modulus " + p.str() + " is not an odd prime");
  }
  Int top = mod_floor(a, p);
  Int bottom = p;
  int sign = 1;
  while (top != 0) {
    while (!boost::multiprecision::bit_test(top, 0)) {
      top >>= 1;
      unsigned r8 = static_cast<unsigned>(bottom % 8);
      if (r8 == 3 || r8 == 5) sign = -sign;
    }
    std::swap(top, bottom);
    if (top % 4 == 3 && bottom % 4 == 3) sign = -sign;
    top %= bottom;
  }
  return bottom == 1 ? sign : 0;
}

/// D = (-1)^alpha * 2^beta * m^2 * product of distinct odd primes.
struct SquareDecomposition {
  int alpha = 0;
  int beta = 0;
  Nat m = 1;
  std::vector<Nat> odd_primes;

  Int reassemble() const {
    Int value = m * m;
    if (beta == 1) value *= 2;
    for (const Nat& q : odd_primes) value *= q;
    return alpha == 1 ? Int(-value) : value;
  }
};

inline SquareDecomposition square_decompose(const Int& D, std::uint64_t trial_bound = kDefaultTrialDivisionBound) {
  if (D == 0) throw Error(Errc::ZeroInput, "cannot decompose zero");
  SquareDecomposition out;
  out.alpha = D.sign() < 0 ? 1 : 0;
  Nat rest = magnitude(D);

  auto absorb = [&out](const Nat& prime, unsigned exponent) {
    for (unsigned i = 0; i < exponent / 2; ++i) out.m *= prime;
    if (exponent % 2 == 1) {
      if (prime == 2) {
        out.beta = 1;
      } else {
        out.odd_primes.push_back(prime);
      }
    }
  };

  unsigned twos = 0;
  while (!boost::multiprecision::bit_test(rest, 0)) {
    rest >>= 1;
    ++twos;
  }
  absorb(2, twos);

  std::uint64_t q = 3;
  for (; Nat(q) * q <= rest; q += 2) {
    if (q > trial_bound) {
      if (!is_prime(rest)) {
        throw Error(Errc::FactorizationTooHard,
                    "cofactor " + rest.str() + " has no factor below the trial-division bound but is composite");
      }
      break;
    }
    unsigned exponent = 0;
    while (rest % q == 0) {
      rest /= q;
      ++exponent;
    }
    if (exponent > 0) absorb(Nat(q), exponent);
  }
  if (rest > 1) absorb(rest, 1);
  return out;
}

/// Solves s = r_i (mod m_i) for pairwise coprime moduli; returns (s, M) with 0 <= s < M = prod m_i.
inline std::pair<Nat, Nat> crt(std::span<const std::pair<Int, Nat>> congruences) {
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    if (congruences[i].second < 1) throw Error(Errc::ModuliNotCoprime, "moduli must be positive");
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      if (gcd(congruences[i].second, congruences[j].second) != 1) {
        throw Error(Errc::ModuliNotCoprime,
                    congruences[i].second.str() + " and " + congruences[j].second.str() + " share a factor");
      }
    }
  }
  Nat s = 0;
  Nat M = 1;
  for (const auto& [residue, modulus] : congruences) {
    // s + M*k = residue (mod modulus)
    Int inv = *mod_inverse(M, modulus);
    Int k = mod_floor((residue - s) * inv, modulus);
    s += M * k;
    M *= modulus;
  }
  return {mod_floor(s, M), M};
}

/// Smallest prime p = s (mod M) with p > exceed, scanning at most `budget` candidates.
inline Nat prime_in_ap(const Nat& s, const Nat& M, const Nat& exceed, std::uint64_t budget = kDefaultPrimeBudget) {
  if (M < 1) throw Error(Errc::NotCoprime, "modulus must be positive");
  if (gcd(s, M) != 1) throw Error(Errc::NotCoprime, "gcd(" + s.str() + ", " + M.str() + ") != 1");
  if (budget == 0) throw Error(Errc::BudgetExhausted, "zero candidate budget");
  Nat candidate = mod_floor(s, M);
  if (candidate <= exceed) candidate += M * ceil_div(exceed + 1 - candidate, M);
  for (std::uint64_t i = 0; i < budget; ++i, candidate += M) {
    if (is_prime(candidate)) return candidate;
  }
  throw Error(Errc::BudgetExhausted, "no prime = " + s.str() + " (mod " + M.str() + ") above " + exceed.str() +
                                         " within " + std::to_string(budget) + " candidates");
}

/// Nonnegative square root of D when D is a perfect square.
inline std::optional<Nat> is_square(const Int& D) {
  if (D.sign() < 0) return std::nullopt;
  Nat root = isqrt(D);
  if (root * root == D) return root;
  return std::nullopt;
}

/// Witness that D is a quadratic non-residue modulo the odd prime p, with p not dividing ell.
struct NonResidueCertificate {
  Int D;
  Int ell;
  Nat p;

  friend bool operator==(const NonResidueCertificate&, const NonResidueCertificate&) = default;
};

inline bool check_nonresidue_certificate(const NonResidueCertificate& cert) {
  if (cert.p < 3 || !is_prime(cert.p) || cert.ell == 0) return false;
  if (cert.ell % cert.p == 0) return false;
  return legendre(cert.D, cert.p) == -1;
}

/// Builds p by the square-class case split: p = 3 (mod 4) for D = -m^2, p = 5 (mod 8) for D = +-2m^2,
/// otherwise p = 1 (mod 8) steered by CRT onto a non-residue class of the first odd prime q_1.
inline NonResidueCertificate nonresidue_prime(const Int& D, const Int& ell,
                                              std::uint64_t budget = kDefaultPrimeBudget) {
  if (D == 0) throw Error(Errc::ZeroInput, "D must be nonzero");
  if (ell == 0) throw Error(Errc::ZeroInput, "ell must be nonzero");
  if (is_square(D)) throw Error(Errc::IsSquare, D.str() + " is a perfect square");

  const SquareDecomposition parts = square_decompose(D);
  Nat residue;
  Nat modulus;
  if (parts.odd_primes.empty()) {
    // alpha = beta = 0 would make D a square, excluded above.
    if (parts.beta == 0) {
      residue = 3;
      modulus = 4;
    } else {
      residue = 5;
      modulus = 8;
    }
  } else {
    const Nat& q1 = parts.odd_primes.front();
    Nat r1 = 2;
    while (legendre(r1, q1) != -1) ++r1;
    std::vector<std::pair<Int, Nat>> system{{1, 8}, {r1, q1}};
    for (std::size_t i = 1; i < parts.odd_primes.size(); ++i) system.emplace_back(1, parts.odd_primes[i]);
    std::tie(residue, modulus) = crt(system);
  }

  // A prime dividing m would give symbol 0, not -1; step past it along the same progression.
  Nat exceed = magnitude(ell);
  Nat p = prime_in_ap(residue, modulus, exceed, budget);
  while (parts.m % p == 0) p = prime_in_ap(residue, modulus, p, budget);

  NonResidueCertificate cert{D, ell, p};
  if (!check_nonresidue_certificate(cert)) {
    throw std::logic_error("non-residue construction produced an invalid prime " + p.str() + " for D = " + D.str());
  }
  return cert;
}

}  // namespace packing
