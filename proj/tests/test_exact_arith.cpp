#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "octgroups/cyclotomic.hpp"
#include "octgroups/quad_sqrt2.hpp"
#include "octgroups/rational.hpp"

using namespace octgroups;

namespace {

std::complex<double> numeric_root(long k, long n) {
  const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

Cyclotomic random_cyclotomic(std::mt19937& rng) {
  static const long conductors[] = {1, 3, 4, 7, 8, 12, 21, 24, 28, 56};
  std::uniform_int_distribution<int> pick(0, 9), coef(-4, 4), den(1, 3), terms(0, 4);
  long n = conductors[pick(rng)];
  Cyclotomic x;
  for (int t = terms(rng); t > 0; --t) {
    std::uniform_int_distribution<long> exp(0, n - 1);
    x += Cyclotomic(make_rational(coef(rng), den(rng))) * Cyclotomic::root(exp(rng), n);
  }
  return x;
}

}  // namespace

TEST_CASE("rationals normalize and print") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational(" -7/21 ") == make_rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0x"), std::invalid_argument);
}

TEST_CASE("QuadSqrt2 arithmetic") {
  QuadSqrt2 r = QuadSqrt2::sqrt2();
  CHECK(r * r == QuadSqrt2(2));
  QuadSqrt2 h = QuadSqrt2(Rational(0), make_rational(1, 2));  // 1/sqrt2
  CHECK(h * r == QuadSqrt2(1));
  CHECK(r.inverse() == h);
  CHECK((QuadSqrt2(1) + r).norm() == -1);
  CHECK((QuadSqrt2(3) - QuadSqrt2(Rational(0), Rational(2))).sign() == 1);
  CHECK((QuadSqrt2(2) - QuadSqrt2(Rational(0), Rational(2))).sign() == -1);
  CHECK(std::abs(h.to_double() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(QuadSqrt2(0).inverse(), std::domain_error);
}

TEST_CASE("roots of unity reduce to minimal conductor") {
  CHECK(Cyclotomic::root(0, 7) == Cyclotomic(1));
  CHECK(Cyclotomic::root(1, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(3, 6) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(2, 6) == Cyclotomic::root(1, 3));
  CHECK(Cyclotomic::root(4, 14) == Cyclotomic::root(2, 7));
  CHECK(Cyclotomic::root(14, 56) == Cyclotomic::root(1, 4));
  CHECK(Cyclotomic::root(1, 4).conductor() == 4);
  CHECK(Cyclotomic::root(1, 6).conductor() == 3);
  CHECK(Cyclotomic::root(1, 3).to_string() == "z3");
  CHECK(Cyclotomic(1).to_string() == "1");
  CHECK(Cyclotomic().to_string() == "0");
}

TEST_CASE("sum of primitive roots is the Moebius value") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 15L, 21L, 28L, 30L}) {
    Cyclotomic s;
    for (long k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) s += Cyclotomic::root(k, n);
    }
    std::complex<double> z;
    for (long k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) z += numeric_root(k, n);
    }
    REQUIRE(s.is_rational());
    CHECK(std::abs(static_cast<double>(s.to_rational().get_d()) - z.real()) < 1e-9);
  }
}

TEST_CASE("mu and eta") {
  Cyclotomic mu = cyc::mu(), eta = cyc::eta();
  CHECK(mu + mu.conjugate() == Cyclotomic(-1));
  CHECK(mu * mu == mu.conjugate());
  CHECK(mu * mu.conjugate() == Cyclotomic(1));
  CHECK(eta + eta.conjugate() == Cyclotomic(-1));
  CHECK(eta * eta.conjugate() == Cyclotomic(2));
  CHECK(eta * eta + eta + Cyclotomic(2) == Cyclotomic());
  CHECK(eta.conductor() == 7);

  const std::complex<double> eta_closed(-0.5, std::sqrt(7.0) / 2.0);
  CHECK(std::abs(eta.to_complex() - eta_closed) < 1e-12);
  const std::complex<double> mu_closed(-0.5, std::sqrt(3.0) / 2.0);
  CHECK(std::abs(mu.to_complex() - mu_closed) < 1e-12);
}

TEST_CASE("string form round-trips") {
  Cyclotomic x = Cyclotomic(make_rational(1, 2)) * (cyc::mu() - cyc::mu().conjugate());
  CHECK(x.to_string() == "1/2*z3 - 1/2*z3^2");
  CHECK(Cyclotomic::parse(x.to_string()) == x);
  CHECK(Cyclotomic::parse("-1 - z7^3 - z7^5 - z7^6") == cyc::eta());
  CHECK(Cyclotomic::parse("0") == Cyclotomic());
  CHECK_THROWS_AS(Cyclotomic::parse("z"), std::invalid_argument);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Cyclotomic y = random_cyclotomic(rng);
    CHECK(Cyclotomic::parse(y.to_string()) == y);
  }
}

TEST_CASE("field axioms and numeric agreement on random elements") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 150; ++t) {
    Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng), c = random_cyclotomic(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
    CHECK(std::abs(a.conjugate().to_complex() - std::conj(a.to_complex())) < 1e-9);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
    }
  }
}

TEST_CASE("equal values have identical stored forms across conductors") {
  // i computed in Q(zeta_8) and Q(zeta_24) and from z3 sums.
  Cyclotomic i8 = Cyclotomic::root(2, 8);
  Cyclotomic i24 = Cyclotomic::root(6, 24);
  CHECK(i8 == i24);
  Cyclotomic sqrt_minus3 = cyc::mu() - cyc::mu().conjugate();
  Cyclotomic sqrt3 = sqrt_minus3 * Cyclotomic::root(3, 4).conjugate() * Cyclotomic(-1);
  CHECK((sqrt3 * sqrt3) == Cyclotomic(3));
  CHECK(sqrt3.conductor() == 12);
  Cyclotomic sqrt2 = Cyclotomic::root(1, 8) + Cyclotomic::root(7, 8);
  CHECK(sqrt2 * sqrt2 == Cyclotomic(2));
}

TEST_CASE("reduction modulo a prime is a ring homomorphism") {
  // p = 337 = 1 + 2*168, primitive root 10
  const std::uint64_t p = 337, g = 10;
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng);
    if (168 % a.conductor() != 0 || 168 % b.conductor() != 0) continue;
    CHECK(((a * b).reduce_mod(p, g)) == (a.reduce_mod(p, g) * b.reduce_mod(p, g)) % p);
    CHECK(((a + b).reduce_mod(p, g)) == (a.reduce_mod(p, g) + b.reduce_mod(p, g)) % p);
  }
  CHECK(Cyclotomic(-1).reduce_mod(p, g) == p - 1);
}

TEST_CASE("galois action") {
  Cyclotomic eta = cyc::eta();
  CHECK(eta.galois(2) == eta);
  CHECK(eta.galois(3) == eta.conjugate());
  CHECK(cyc::mu().galois(2) == cyc::mu().conjugate());
  CHECK_THROWS(eta.galois(7));
}
