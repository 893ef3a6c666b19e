#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "octgroups/octonion.hpp"

using namespace octgroups;

namespace {

Octonion e(int i) { return Octonion::unit(i); }

Octonion random_octonion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::array<Rational, 8> c;
  for (auto& q : c) q = make_rational(num(rng), den(rng));
  return Octonion(c);
}

}  // namespace

TEST_CASE("structure constants") {
  const auto& table = StructureConstants::instance();
  int nonzero_unordered = 0;
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      for (int k = 1; k <= 7; ++k) {
        int v = table.phi(i, j, k);
        CHECK(v == -table.phi(j, i, k));
        CHECK(v == -table.phi(i, k, j));
        CHECK(v == table.phi(j, k, i));
        if (i < j && j < k && v != 0) ++nonzero_unordered;
      }
    }
  }
  CHECK(nonzero_unordered == 7);
  // Every pair of points lies on exactly one line.
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      int lines = 0;
      for (int k = 1; k <= 7; ++k) lines += table.phi(i, j, k) != 0;
      CHECK(lines == 1);
    }
  }
}

TEST_CASE("basis products") {
  CHECK(e(1) * e(2) == e(3));
  CHECK(e(5) * e(5) == Octonion(Rational(-1)));
  CHECK(e(7) * e(1) == e(4));
  CHECK(e(2) * e(1) == -e(3));
  CHECK(e(1) * e(2) * e(3) == Octonion(Rational(-1)));
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i != j) CHECK(e(i) * e(j) == -(e(j) * e(i)));
    }
  }
}

TEST_CASE("conjugate and norm") {
  CHECK(e(3).conjugate() == -e(3));
  CHECK((e(0) + e(1)).norm() == 2);
  for (int i = 1; i <= 7; ++i) CHECK(e(i).norm() == 1);
  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    Octonion a = random_octonion(rng);
    Octonion n = a * a.conjugate();
    CHECK(n == Octonion(a.norm()));
  }
}

TEST_CASE("associator") {
  CHECK(associator(e(1), e(2), e(3)).is_zero());
  CHECK(associator(e(1), e(2), e(4)) == Octonion::unit(5, Rational(-2)));
  // brute-force the two bracketings directly from the table
  CHECK(e(1) * (e(2) * e(4)) == e(5));
  CHECK((e(1) * e(2)) * e(4) == -e(5));
}

TEST_CASE("triads") {
  CHECK(triad_type(2, 4, 6) == TriadType::associative);
  CHECK(triad_type(1, 2, 4) == TriadType::anti_associative);
  int associative = 0, anti = 0;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        bool assoc = triad_type(i, j, k) == TriadType::associative;
        assoc ? ++associative : ++anti;
        CHECK(assoc == associator(e(i), e(j), e(k)).is_zero());
      }
    }
  }
  CHECK(associative == 7);
  CHECK(anti == 28);
  CHECK_THROWS_AS(triad_type(1, 1, 2), std::invalid_argument);
}

TEST_CASE("norm multiplicativity and alternativity") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 60; ++t) {
    Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * a) * b == a * (a * b));
    CHECK((a * b) * b == a * (b * b));
    CHECK(associator(a, a, b).is_zero());
  }
}

TEST_CASE("algebra automorphisms") {
  CHECK(is_algebra_automorphism(SignedPerm::parse("(e1 e2 e4 e3 e6 e5 e7)", 7)));
  CHECK(is_algebra_automorphism(SignedPerm::diagonal({1, 1, 1, -1, -1, -1, -1})));
  CHECK_FALSE(is_algebra_automorphism(SignedPerm::parse("(e1 e6 e2)(e3 e5 e4)", 7)));
  CHECK(is_algebra_automorphism(SignedPerm::identity(7)));
  CHECK_FALSE(is_algebra_automorphism(SignedPerm::diagonal({-1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("parse and print") {
  CHECK(Octonion::parse("e1") == e(1));
  CHECK(Octonion::parse("1 - 1/2*e3 + e7") == e(0) - Octonion::unit(3, make_rational(1, 2)) + e(7));
  CHECK((e(0) - Octonion::unit(3, make_rational(1, 2))).to_string() == "1 - 1/2*e3");
  CHECK(Octonion().to_string() == "0");
  CHECK(Octonion::parse("-e2").to_string() == "-e2");
  CHECK_THROWS_AS(Octonion::parse("e8"), std::invalid_argument);
  CHECK_THROWS_AS(Octonion::parse(""), std::invalid_argument);
}
