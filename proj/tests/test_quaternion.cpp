#include <doctest.h>

#include <set>
#include <stdexcept>

#include "octgroups/group.hpp"
#include "octgroups/quaternion.hpp"

using namespace octgroups;

namespace {

Quaternion q(long a, long b, long c, long d) { return {a, b, c, d}; }

std::string key(const Quaternion& x) { return x.to_string(); }

}  // namespace

TEST_CASE("Hamilton products of the units") {
  auto one = Quaternion::unit(0), i = Quaternion::unit(1), j = Quaternion::unit(2), k = Quaternion::unit(3);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(i * j * k == -one);
}

TEST_CASE("norm is multiplicative and conjugation reverses products") {
  Quaternion a = q(1, 2, -1, 3), b{QuadSqrt2(1, 1), 0, QuadSqrt2(0, -1), 2};
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
  CHECK(a * a.conjugate() == Quaternion(a.norm(), 0, 0, 0));
}

TEST_CASE("binary octahedral group: 48 unit elements, 8 per coset, closed") {
  auto elems = binary_octahedral();
  REQUIRE(elems.size() == 48);
  std::set<std::string> keys;
  std::map<Coset, int> per_coset;
  for (const auto& e : elems) {
    CHECK(e.value.norm() == QuadSqrt2(1));
    CHECK(coset_of(e.value) == e.coset);
    keys.insert(key(e.value));
    ++per_coset[e.coset];
  }
  CHECK(keys.size() == 48);
  for (auto c : kCosets) CHECK(per_coset[c] == 8);
  for (const auto& x : elems)
    for (const auto& y : elems) CHECK(keys.count(key(x.value * y.value)) == 1);
}

TEST_CASE("printed coset table agrees with elementwise products") {
  auto elems = binary_octahedral();
  for (const auto& x : elems)
    for (const auto& y : elems) CHECK(coset_of(x.value * y.value) == coset_product(x.coset, y.coset));
}

TEST_CASE("coset_of rejects non-members") {
  CHECK_THROWS_AS(coset_of(q(2, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(coset_of(Quaternion{QuadSqrt2(make_rational(1, 2)), QuadSqrt2(make_rational(1, 2)), 0, 0}), std::invalid_argument);
}

TEST_CASE("pair canonicalization identifies [p,q] with [-p,-q]") {
  QuaternionPair a{q(0, -1, 0, 0), Quaternion::unit(2)};
  QuaternionPair b{Quaternion::unit(1), -Quaternion::unit(2)};
  CHECK(a.canonical() == b.canonical());
  auto h = q(1, 2, 3, 4);
  CHECK(a.apply(h) == b.apply(h));
}

TEST_CASE("pair group has 192 elements and is closed under composition") {
  auto pairs = pair_group();
  REQUIRE(pairs.size() == 192);
  std::set<std::string> keys;
  for (const auto& g : pairs) keys.insert(key(g.p) + "|" + key(g.q));
  CHECK(keys.size() == 192);
  for (std::size_t a = 0; a < pairs.size(); a += 7)
    for (const auto& b : pairs) {
      auto c = compose(pairs[a], b).canonical();
      CHECK(keys.count(key(c.p) + "|" + key(c.q)) == 1);
    }
}

TEST_CASE("compose acts left to right on quaternions") {
  QuaternionPair a{Quaternion::unit(1), Quaternion::unit(2)};
  QuaternionPair b{Quaternion::unit(3), q(1, 1, 0, 0)};
  auto h = q(1, -2, 0, 5);
  CHECK(compose(a, b).apply(h) == b.apply(a.apply(h)));
}

TEST_CASE("map to signed permutations of the octonion units is a faithful homomorphism") {
  auto pairs = pair_group();
  std::vector<SignedPerm> images;
  for (const auto& g : pairs) images.push_back(pair_to_signed_perm7(g));
  std::set<SignedPerm> distinct(images.begin(), images.end());
  CHECK(distinct.size() == 192);
  for (std::size_t a = 0; a < pairs.size(); a += 11)
    for (std::size_t b = 0; b < pairs.size(); b += 5)
      CHECK(pair_to_signed_perm7(compose(pairs[a], pairs[b])) == images[a] * images[b]);
  CHECK(Group::close(images).order() == 192);
}

TEST_CASE("pairs outside the preserving set do not give signed permutations") {
  QuaternionPair g{q(1, 1, 0, 0), Quaternion::unit(0)};
  CHECK_THROWS_AS(pair_to_signed_perm7(g), std::invalid_argument);
}
