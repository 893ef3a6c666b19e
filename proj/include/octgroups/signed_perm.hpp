#pragma once

// Monomial matrices with entries +-1.
//
// Points are 0-based internally and 1-based in the text notation. Basis vector
// e_i maps to sign(i) * e_image(i). Composition is left to right:
// compose(g, h) applies g first, then h, which is the matrix product M_g * M_h
// for the row-vector matrix M[i][image(i)] = sign(i). Conjugation is
// x^g = g^-1 * x * g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octgroups {

class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(std::size_t degree);
  /// Sign-only element diag(signs[0], ..., signs[n-1]).
  static SignedPerm diagonal(std::span<const int> signs);
  static SignedPerm diagonal(std::initializer_list<int> signs) {
    return diagonal(std::span<const int>(signs.begin(), signs.size()));
  }
  /// Throws std::invalid_argument unless image is a bijection of [0, n) and
  /// every sign is +-1.
  static SignedPerm from_images(std::vector<std::uint32_t> image, std::vector<int> signs);
  /// Unsigned permutation from 1-based cycles, e.g. {{1,5},{3,7}}.
  static SignedPerm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);
  /// Signed-cycle notation, e.g. "(e1 -e5)(e3 -e7)". Unmentioned points are
  /// fixed with sign +1; "" and "()" give the identity.
  static SignedPerm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return packed_.size(); }
  std::uint32_t image(std::size_t i) const { return static_cast<std::uint32_t>(std::abs(packed_[i]) - 1); }
  int sign(std::size_t i) const { return packed_[i] < 0 ? -1 : 1; }
  std::uint64_t sign_mask() const;

  SignedPerm inverse() const;
  SignedPerm pow(long k) const;
  std::size_t order() const;
  SignedPerm underlying_permutation() const;
  bool is_diagonal() const;
  bool is_identity() const;
  /// Sum of signs over fixed points of the underlying permutation.
  int trace() const;
  /// Parity of the induced permutation of the 2n signed points {+-e_i}.
  bool is_even_on_signed_points() const;

  std::vector<std::vector<int>> matrix() const;
  /// Inverse of parse(); the identity renders "()".
  std::string to_string() const;

  friend SignedPerm compose(const SignedPerm& g, const SignedPerm& h);
  friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) { return compose(g, h); }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  /// Canonical order: image array lexicographically, then signs (+ before -).
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b);

  std::size_t hash() const;

 private:
  explicit SignedPerm(std::vector<std::int16_t> packed) : packed_(std::move(packed)) {}
  std::vector<std::int16_t> packed_;  // sign * (image + 1)
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& g) const { return g.hash(); }
};

/// g^-1 * x * g
inline SignedPerm conjugate(const SignedPerm& x, const SignedPerm& g) { return compose(compose(g.inverse(), x), g); }

}  // namespace octgroups
