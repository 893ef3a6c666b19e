#pragma once

// Octonions over the rationals on the basis {1, e1, ..., e7}.
//
// e_i e_j = -delta_ij + sum_k phi_ijk e_k, with phi completely antisymmetric
// and phi = +1 on the triples (1,2,3), (2,4,6), (4,3,5), (3,6,7), (6,5,1),
// (5,7,2), (7,1,4) and their cyclic rotations. These seven triples are the
// lines of the Fano plane.

#include <array>
#include <string>
#include <string_view>

#include "octgroups/rational.hpp"
#include "octgroups/signed_perm.hpp"

namespace octgroups {

class StructureConstants {
 public:
  static const StructureConstants& instance();

  /// phi_ijk for 1-based indices in [1,7].
  int phi(int i, int j, int k) const { return phi_[i][j][k]; }
  /// e_i * e_j for i != j is product_sign(i,j) * e_{product_index(i,j)}.
  int product_index(int i, int j) const { return index_[i][j]; }
  int product_sign(int i, int j) const { return sign_[i][j]; }

  static constexpr std::array<std::array<int, 3>, 7> kSeedTriples{{
      {1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {3, 6, 7}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4}}};

 private:
  StructureConstants();
  int phi_[8][8][8]{};
  int index_[8][8]{};
  int sign_[8][8]{};
};

class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> coeffs) : c_(std::move(coeffs)) {}
  explicit Octonion(const Rational& scalar) { c_[0] = scalar; }

  /// 1 for i = 0, e_i for i in [1,7].
  static Octonion unit(int i, const Rational& coefficient = Rational(1));
  /// Sums of terms like "e1", "-e3", "1/2*e2", "3", "1 + e7".
  static Octonion parse(std::string_view text);

  const Rational& operator[](int i) const { return c_[i]; }
  const std::array<Rational, 8>& coeffs() const { return c_; }

  Octonion conjugate() const;
  Rational norm() const;
  bool is_zero() const;

  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a);
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Rational& s, const Octonion& a);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<Rational, 8> c_{};
};

/// (a b) c - a (b c)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

enum class TriadType { associative, anti_associative };

/// Throws std::invalid_argument on repeated or out-of-range indices.
TriadType triad_type(int i, int j, int k);

/// Image of e_i (i in [1,7]) under g acting linearly with 1 fixed.
Octonion apply(const SignedPerm& g, const Octonion& x);

/// True iff g(e_i) g(e_j) = g(e_i e_j) for all i, j. Requires degree 7.
bool is_algebra_automorphism(const SignedPerm& g);

}  // namespace octgroups
