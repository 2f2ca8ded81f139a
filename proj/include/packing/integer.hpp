#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace packing {

using Int = boost::multiprecision::cpp_int;
// Nonnegative by contract; checked at every public entry point that takes one.
using Nat = Int;
using Rational = boost::multiprecision::cpp_rational;

enum class Errc {
  NegativeInput,
  InvalidDimension,
  OddNumerator,
  InvalidM,
  NotOddPrime,
  ZeroInput,
  FactorizationTooHard,
  ModuliNotCoprime,
  NotCoprime,
  BudgetExhausted,
  IsSquare,
  NotQuadratic,
  SearchExhausted,
  DimensionTooSmall,
  InvalidSector,
  NotInSector,
  ParseError,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::OddNumerator: return "OddNumerator";
    case Errc::InvalidM: return "InvalidM";
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::FactorizationTooHard: return "FactorizationTooHard";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::IsSquare: return "IsSquare";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::InvalidSector: return "InvalidSector";
    case Errc::NotInSector: return "NotInSector";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require_nonnegative(const Int& n, const char* what) {
  if (n.sign() < 0) throw Error(Errc::NegativeInput, std::string(what) + " must be nonnegative");
}

/// Least nonnegative residue of n modulo m (m > 0).
inline Int mod_floor(const Int& n, const Int& m) {
  Int r = n % m;
  if (r.sign() < 0) r += m;
  return r;
}

inline Int floor_div(const Int& n, const Int& m) {
  Int q = n / m;
  if ((n % m) != 0 && ((n.sign() < 0) != (m.sign() < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& n, const Int& m) { return -floor_div(-n, m); }

inline Int floor_rational(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Int ceil_rational(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Int magnitude(const Int& n) { return n.sign() < 0 ? Int(-n) : n; }

/// Floor of the square root: isqrt(n)^2 <= n < (isqrt(n)+1)^2.
inline Nat isqrt(const Nat& n) {
  require_nonnegative(n, "isqrt argument");
  if (n < 2) return n;
  // Start above the root; Newton's iterates then decrease monotonically to it.
  Nat x = Nat(1) << (boost::multiprecision::msb(n) / 2 + 1);
  Nat y = (x + n / x) >> 1;
  while (y < x) {
    x = y;
    y = (x + n / x) >> 1;
  }
  return x;
}

/// Decimal integer with optional leading '-'; no whitespace, no '+', no empty digits.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw Error(Errc::ParseError, "empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error(Errc::ParseError, "not a decimal integer: '" + std::string(text) + "'");
  }
  Int value{std::string(digits)};
  return text.front() == '-' ? Int(-value) : value;
}

inline Nat parse_nat(std::string_view text) {
  Int value = parse_int(text);
  if (value.sign() < 0) throw Error(Errc::NegativeInput, "expected a nonnegative integer: '" + std::string(text) + "'");
  return value;
}

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace packing
