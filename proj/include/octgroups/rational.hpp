#pragma once

// Exact rationals backed by GMP. mpq_class keeps values in lowest terms with a
// positive denominator as long as every construction path calls canonicalize().

#include <gmpxx.h>

#include <string>

namespace octgroups {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "n" or "n/d"; throws std::invalid_argument on malformed input or d == 0.
Rational parse_rational(const std::string& text);

}  // namespace octgroups
