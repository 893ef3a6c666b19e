#pragma once

// Quaternions over Q(sqrt 2), the binary octahedral group split into the six
// cosets V0, V+, V-, V1, V2, V3 of the quaternion group V0, and the group of
// pairs [p, q] : h -> p h q that preserve V0.

#include <array>
#include <string>
#include <vector>

#include "octgroups/quad_sqrt2.hpp"
#include "octgroups/signed_perm.hpp"

namespace octgroups {

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(QuadSqrt2 a, QuadSqrt2 b, QuadSqrt2 c, QuadSqrt2 d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  /// 1 for i = 0, e_i for i in [1,3].
  static Quaternion unit(int i);

  const QuadSqrt2& operator[](int i) const { return c_[i]; }

  Quaternion conjugate() const;
  QuadSqrt2 norm() const;
  bool is_zero() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const QuadSqrt2& s, const Quaternion& a);
  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<QuadSqrt2, 4> c_{};
};

enum class Coset { V0, Vplus, Vminus, V1, V2, V3 };
inline constexpr std::array<Coset, 6> kCosets{Coset::V0, Coset::Vplus, Coset::Vminus, Coset::V1, Coset::V2, Coset::V3};

std::string to_string(Coset c);

/// Throws std::invalid_argument if q is not one of the 48 elements.
Coset coset_of(const Quaternion& q);

/// The coset multiplication table as printed (row coset times column coset).
Coset coset_product(Coset s, Coset t);

struct OctahedralElement {
  Quaternion value;
  Coset coset;
};

/// The 48 elements, listed coset by coset.
std::vector<OctahedralElement> binary_octahedral();

/// The SO(4) element h -> p h q. [p, q] and [-p, -q] are identified; canonical()
/// picks the representative whose first nonzero coordinate of p is positive.
struct QuaternionPair {
  Quaternion p;
  Quaternion q;

  QuaternionPair canonical() const;
  Quaternion apply(const Quaternion& h) const { return p * h * q; }
  friend bool operator==(const QuaternionPair& a, const QuaternionPair& b) { return a.p == b.p && a.q == b.q; }
};

/// Left to right, like SignedPerm: compose(a, b) sends h to b.p (a.p h a.q) b.q.
QuaternionPair compose(const QuaternionPair& a, const QuaternionPair& b);

/// The 192 canonical pairs of [V0,V0] + [V+,V-] + [V-,V+] + [V1,V1] + [V2,V2] + [V3,V3].
std::vector<QuaternionPair> pair_group();

/// Action on the octonion basis: e1, e2, e3 transform by v -> p v p-bar and the
/// block (e7, e4, e5, e6) = e7 (1, e1, e2, e3) by e7 h -> e7 (p h q).
/// Throws std::invalid_argument if the result is not a signed permutation.
SignedPerm pair_to_signed_perm7(const QuaternionPair& g);

}  // namespace octgroups
