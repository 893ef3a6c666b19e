#pragma once

// Exact elements of cyclotomic fields Q(zeta_N).
//
// Canonical form: the value is stored over the Zumbroich basis of Q(zeta_n),
// where n is the smallest conductor whose field contains the value (n is never
// 2 mod 4). For n = prod p^e the basis is the set of zeta_n^k whose p-component
// a_p = k * (n/p^e)^-1 mod p^e, written a_p = j + p^(e-1) i with
// 0 <= j < p^(e-1), has i in {1..p-1} for odd p and i = 0 for p = 2. These
// bases are nested under divisibility (up to the trivial relation 1 = -sum of
// primitive p-th roots), so two equal field elements always have identical
// (conductor, terms) pairs.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "octgroups/rational.hpp"

namespace octgroups {

class Cyclotomic {
 public:
  using Term = std::pair<long, Rational>;  // exponent k, coefficient of zeta_n^k

  Cyclotomic() = default;
  Cyclotomic(long value);             // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k
  static Cyclotomic root(long k, long n);
  /// Sum of coeffs[k] * zeta_n^k for k in [0, n); any n >= 1.
  static Cyclotomic from_dense(long n, std::vector<Rational> coeffs);
  /// Parses the "z{n}^{k}" grammar produced by to_string().
  static Cyclotomic parse(const std::string& text);

  long conductor() const { return conductor_; }
  /// Zumbroich-basis terms, ascending exponent.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  /// Throws std::domain_error when the value is not rational.
  Rational to_rational() const;
  std::complex<double> to_complex() const;

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conjugate() const { return galois(-1); }
  /// Galois automorphism zeta_n -> zeta_n^a for a coprime to the conductor.
  Cyclotomic galois(long a) const;
  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    return x.conductor_ == y.conductor_ && x.terms_ == y.terms_;
  }
  /// Total order on stored forms (conductor, then terms); not a field order.
  friend bool operator<(const Cyclotomic& x, const Cyclotomic& y);

  /// Image under Z[zeta_e] -> GF(p), zeta_e -> root^((p-1)/e), where the
  /// conductor divides p-1 and root is a primitive root mod p.
  std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t primitive_root) const;

  /// Ascending-exponent rendering, e.g. "1/2*z3 - 1/2*z3^2"; zero renders "0".
  std::string to_string() const;

 private:
  long conductor_ = 1;
  std::vector<Term> terms_;
};

/// mu = (-1 + i sqrt3)/2 and eta = (-1 + i sqrt7)/2, the irrationalities of the small tables.
namespace cyc {
inline Cyclotomic mu() { return Cyclotomic::root(1, 3); }
inline Cyclotomic eta() { return Cyclotomic::root(1, 7) + Cyclotomic::root(2, 7) + Cyclotomic::root(4, 7); }
}  // namespace cyc

}  // namespace octgroups
