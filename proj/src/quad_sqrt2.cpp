#include "octgroups/quad_sqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace octgroups {

QuadSqrt2& QuadSqrt2::operator+=(const QuadSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadSqrt2& QuadSqrt2::operator-=(const QuadSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadSqrt2& QuadSqrt2::operator*=(const QuadSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadSqrt2 QuadSqrt2::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("QuadSqrt2: inverse of zero");
  return {a_ / n, -b_ / n};
}

// sign(a + b sqrt2) without floating point: compare a^2 against 2 b^2.
int QuadSqrt2::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = a_ * a_;
  Rational rhs = 2 * b_ * b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QuadSqrt2::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s = a_ == 0 ? "" : a_.get_str() + (b_ > 0 ? "+" : "");
  return s + b_.get_str() + "*sqrt2";
}

}  // namespace octgroups
