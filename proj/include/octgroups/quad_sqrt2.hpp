#pragma once

#include <string>

#include "octgroups/rational.hpp"

namespace octgroups {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class QuadSqrt2 {
 public:
  QuadSqrt2() = default;
  QuadSqrt2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadSqrt2(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadSqrt2 sqrt2() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  /// a - b*sqrt(2)
  QuadSqrt2 galois_conjugate() const { return {a_, -b_}; }
  /// a^2 - 2 b^2
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QuadSqrt2 inverse() const;

  QuadSqrt2 operator-() const { return {-a_, -b_}; }
  QuadSqrt2& operator+=(const QuadSqrt2& o);
  QuadSqrt2& operator-=(const QuadSqrt2& o);
  QuadSqrt2& operator*=(const QuadSqrt2& o);

  friend QuadSqrt2 operator+(QuadSqrt2 x, const QuadSqrt2& y) { return x += y; }
  friend QuadSqrt2 operator-(QuadSqrt2 x, const QuadSqrt2& y) { return x -= y; }
  friend QuadSqrt2 operator*(QuadSqrt2 x, const QuadSqrt2& y) { return x *= y; }
  friend QuadSqrt2 operator/(const QuadSqrt2& x, const QuadSqrt2& y) { return x * y.inverse(); }
  friend bool operator==(const QuadSqrt2& x, const QuadSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  double to_double() const;
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace octgroups
