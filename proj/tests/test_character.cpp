#include <doctest.h>

#include <algorithm>

#include "octgroups/catalog.hpp"
#include "octgroups/character.hpp"

using namespace octgroups;

namespace {

std::vector<long> degrees(const CharacterTable& T) {
  std::vector<long> d;
  for (const auto& r : T.irreps) d.push_back(r.degree);
  return d;
}

// chi at an arbitrary element, through the class index of the Group.
const Cyclotomic& value_at(const CharacterRow& chi, const Group& G, std::size_t element) { return chi.values[G.class_of(element)]; }

}  // namespace

TEST_CASE("table classes follow the group's classes") {
  const auto& G = *build_shared("PSL2(7)");
  auto T = character_table(G);
  REQUIRE(T.classes.size() == G.classes().size());
  for (std::size_t k = 0; k < T.classes.size(); ++k) {
    CHECK(T.classes[k].representative == G.classes()[k].representative);
    CHECK(T.classes[k].size == G.classes()[k].size);
  }
}

TEST_CASE("known degree lists") {
  CHECK(degrees(character_table(*build_shared("7:3"))) == std::vector<long>{1, 1, 1, 3, 3});
  CHECK(degrees(character_table(*build_shared("PSL2(7)"))) == std::vector<long>{1, 3, 3, 6, 7, 8});
  CHECK(degrees(character_table(*build_shared("2^3.PSL2(7)"))) == std::vector<long>{1, 3, 3, 6, 7, 7, 7, 8, 14, 21, 21});
}

TEST_CASE("splitting prime") {
  CHECK(smallest_prime_one_mod(21, 8) == 43);
  CHECK(smallest_prime_one_mod(1, 1) == 2);
  auto T = character_table(*build_shared("7:3"));
  CHECK(T.prime % 21 == 1);
  CHECK(T.prime > 2 * 4);
}

TEST_CASE("sum of squared degrees, first and second orthogonality") {
  for (const char* name : {"7:3", "2^3:7:3", "PSL2(7)", "4.S4:2", "2^3.S4"}) {
    CAPTURE(name);
    const auto& G = *build_shared(name);
    auto T = character_table(G);
    REQUIRE(T.irreps.size() == T.classes.size());
    long sum = 0;
    for (auto d : degrees(T)) sum += d * d;
    CHECK(static_cast<std::size_t>(sum) == G.order());
    for (std::size_t i = 0; i < T.irreps.size(); ++i)
      for (std::size_t j = 0; j < T.irreps.size(); ++j)
        CHECK(inner_product(T.irreps[i], T.irreps[j], T) == Rational(i == j ? 1 : 0));
    // Column orthogonality, summed directly over irreps.
    for (std::size_t a = 0; a < T.classes.size(); ++a)
      for (std::size_t b = 0; b < T.classes.size(); ++b) {
        Cyclotomic s;
        for (const auto& chi : T.irreps) s += chi.values[a] * chi.values[b].conjugate();
        Cyclotomic expected = a == b ? Cyclotomic(static_cast<long>(G.order() / T.classes[a].size)) : Cyclotomic();
        CHECK(s == expected);
      }
  }
}

TEST_CASE("class algebra constants by direct multiplication") {
  const auto& G = *build_shared("2^3:7:3");
  auto A = class_algebra(G);
  const auto& cls = G.classes();
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (std::size_t k = 0; k < cls.size(); ++k) {
        auto z = *G.index_of(cls[k].representative);
        std::uint64_t count = 0;
        for (auto x : cls[i].members)
          for (auto y : cls[j].members) count += G.multiply(x, y) == z;
        CHECK(A(i, j, k) == count);
      }
}

TEST_CASE("characters are class functions satisfying the central character identity") {
  const auto& G = *build_shared("PSL2(7)");
  auto T = character_table(G);
  auto A = class_algebra(G);
  // omega_i * omega_j = sum_k a(i,j,k) omega_k with omega_i = |C_i| chi(C_i) / chi(1).
  for (const auto& chi : T.irreps) {
    auto omega = [&](std::size_t i) { return Cyclotomic(static_cast<long>(T.classes[i].size)) * chi.values[i] / Cyclotomic(chi.degree); };
    for (std::size_t i = 0; i < T.classes.size(); ++i)
      for (std::size_t j = 0; j < T.classes.size(); ++j) {
        Cyclotomic rhs;
        for (std::size_t k = 0; k < T.classes.size(); ++k) rhs += Cyclotomic(static_cast<long>(A(i, j, k))) * omega(k);
        CHECK(omega(i) * omega(j) == rhs);
      }
  }
}

TEST_CASE("Frobenius-Schur indicator via power map equals the elementwise sum") {
  for (const char* name : {"7:3", "4.S4:2", "2^3.PSL2(7)"}) {
    CAPTURE(name);
    const auto& G = *build_shared(name);
    auto T = character_table(G);
    for (const auto& chi : T.irreps) {
      Cyclotomic s;
      for (std::size_t g = 0; g < G.order(); ++g) s += value_at(chi, G, G.multiply(g, g));
      Rational r = s.to_rational() / Rational(static_cast<long>(G.order()));
      CHECK(Cyclotomic(r) == s / Cyclotomic(static_cast<long>(G.order())));
      CHECK(Rational(frobenius_schur(chi, T)) == r);
    }
  }
}

TEST_CASE("7:3 has two complex pairs and a real trivial character") {
  auto T = character_table(*build_shared("7:3"));
  std::vector<int> fs;
  for (const auto& chi : T.irreps) fs.push_back(frobenius_schur(chi, T));
  CHECK(fs == std::vector<int>{1, 0, 0, 0, 0});
}

TEST_CASE("natural character decomposes with non-negative multiplicities") {
  const auto& G = *build_shared("2^3.PSL2(7)");
  auto T = character_table(G);
  auto nat = natural_character(G);
  CHECK(nat.degree == 7);
  auto m = decompose(nat, T);
  long dim = 0;
  for (std::size_t i = 0; i < m.size(); ++i) dim += m[i] * T.irreps[i].degree;
  CHECK(dim == 7);
  CHECK(inner_product(nat, nat, T) == Rational(1));
}

TEST_CASE("tensor products preserve dimension and commute") {
  auto T = character_table(*build_shared("2^3:7:3"));
  for (std::size_t i = 0; i < T.irreps.size(); ++i)
    for (std::size_t j = 0; j < T.irreps.size(); ++j) {
      auto m = tensor_decompose(i, j, T);
      long dim = 0;
      for (std::size_t k = 0; k < m.size(); ++k) dim += m[k] * T.irreps[k].degree;
      CHECK(dim == T.irreps[i].degree * T.irreps[j].degree);
      CHECK(m == tensor_decompose(j, i, T));
    }
}

TEST_CASE("branching: restriction of the trivial character and Frobenius reciprocity") {
  const auto& G = *build_shared("PSL2(7)");
  const auto& H = *build_shared("7:3");
  REQUIRE(is_subgroup(G, H));
  auto TG = character_table(G);
  auto TH = character_table(H);
  auto b = branch(G, H, TG, TH);
  CHECK(b[0] == std::vector<long>{1, 0, 0, 0, 0});
  for (std::size_t i = 0; i < b.size(); ++i) {
    long dim = 0;
    for (std::size_t k = 0; k < b[i].size(); ++k) dim += b[i][k] * TH.irreps[k].degree;
    CHECK(dim == TG.irreps[i].degree);
  }
  // Induced trivial character has degree 8 = [G:H]: sum_i b[i][0] chi_i(1) = 8.
  long induced = 0;
  for (std::size_t i = 0; i < b.size(); ++i) induced += b[i][0] * TG.irreps[i].degree;
  CHECK(induced == 8);
}

TEST_CASE("decompose rejects non-characters") {
  auto T = character_table(*build_shared("7:3"));
  CharacterRow half = T.irreps[0];
  for (auto& v : half.values) v = Cyclotomic(make_rational(1, 2));
  CHECK_THROWS_AS(decompose(half, T), std::domain_error);
}
