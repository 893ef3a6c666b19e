#include "octgroups/quaternion.hpp"

#include <stdexcept>

namespace octgroups {

namespace {

// e_i e_j for i, j in [1,3], i != j: sign and index, from e1 e2 = e3 cyclically.
int product_index(int i, int j) { return 6 - i - j; }
int product_sign(int i, int j) { return (j - i + 3) % 3 == 1 ? 1 : -1; }

const QuadSqrt2 kHalf{make_rational(1, 2)};
const QuadSqrt2 kInvSqrt2{Rational(0), make_rational(1, 2)};

}  // namespace

Quaternion Quaternion::unit(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("Quaternion::unit: index must be in [0,3]");
  Quaternion x;
  x.c_[i] = QuadSqrt2(1);
  return x;
}

Quaternion Quaternion::conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

QuadSqrt2 Quaternion::norm() const {
  QuadSqrt2 n;
  for (const auto& x : c_) n += x * x;
  return n;
}

bool Quaternion::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Quaternion operator-(const Quaternion& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }

Quaternion operator*(const QuadSqrt2& s, const Quaternion& a) { return {s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  Quaternion r;
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j].is_zero()) continue;
      QuadSqrt2 p = a.c_[i] * b.c_[j];
      if (i == 0) {
        r.c_[j] += p;
      } else if (j == 0) {
        r.c_[i] += p;
      } else if (i == j) {
        r.c_[0] -= p;
      } else if (product_sign(i, j) > 0) {
        r.c_[product_index(i, j)] += p;
      } else {
        r.c_[product_index(i, j)] -= p;
      }
    }
  }
  return r;
}

std::string Quaternion::to_string() const {
  static const char* names[] = {"1", "e1", "e2", "e3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")*" + names[i];
  }
  return out.empty() ? "0" : out;
}

std::string to_string(Coset c) {
  switch (c) {
    case Coset::V0: return "V0";
    case Coset::Vplus: return "V+";
    case Coset::Vminus: return "V-";
    case Coset::V1: return "V1";
    case Coset::V2: return "V2";
    case Coset::V3: return "V3";
  }
  return "?";
}

Coset coset_of(const Quaternion& q) {
  int nonzero = 0;
  int plus_signs = 0;
  bool halves = true, unit_entries = true, root_half = true;
  for (int i = 0; i < 4; ++i) {
    const QuadSqrt2& x = q[i];
    if (x.is_zero()) continue;
    ++nonzero;
    if (x.sign() > 0) ++plus_signs;
    halves = halves && (x == kHalf || x == -kHalf);
    unit_entries = unit_entries && (x == QuadSqrt2(1) || x == QuadSqrt2(-1));
    root_half = root_half && (x == kInvSqrt2 || x == -kInvSqrt2);
  }
  if (nonzero == 1 && unit_entries) return Coset::V0;
  if (nonzero == 4 && halves) return plus_signs % 2 == 0 ? Coset::Vplus : Coset::Vminus;
  if (nonzero == 2 && root_half) {
    // V1: {1,e1} or {e2,e3}; V2: {1,e2} or {e3,e1}; V3: {1,e3} or {e1,e2}
    auto has = [&](int i) { return !q[i].is_zero(); };
    if ((has(0) && has(1)) || (has(2) && has(3))) return Coset::V1;
    if ((has(0) && has(2)) || (has(3) && has(1))) return Coset::V2;
    return Coset::V3;
  }
  throw std::invalid_argument("coset_of: not an element of the binary octahedral group: " + q.to_string());
}

Coset coset_product(Coset s, Coset t) {
  using C = Coset;
  static const C table[6][6] = {
      {C::V0, C::Vplus, C::Vminus, C::V1, C::V2, C::V3},
      {C::Vplus, C::Vminus, C::V0, C::V3, C::V1, C::V2},
      {C::Vminus, C::V0, C::Vplus, C::V2, C::V3, C::V1},
      {C::V1, C::V2, C::V3, C::V0, C::Vplus, C::Vminus},
      {C::V2, C::V3, C::V1, C::Vminus, C::V0, C::Vplus},
      {C::V3, C::V1, C::V2, C::Vplus, C::Vminus, C::V0},
  };
  return table[static_cast<int>(s)][static_cast<int>(t)];
}

std::vector<OctahedralElement> binary_octahedral() {
  std::vector<OctahedralElement> out;
  // V0
  for (int i = 0; i < 4; ++i) {
    for (int s : {1, -1}) {
      Quaternion q = QuadSqrt2(s) * Quaternion::unit(i);
      out.push_back({q, Coset::V0});
    }
  }
  // V+ then V-
  for (Coset target : {Coset::Vplus, Coset::Vminus}) {
    for (int mask = 0; mask < 16; ++mask) {
      std::array<QuadSqrt2, 4> c;
      int plus = 0;
      for (int i = 0; i < 4; ++i) {
        bool negative = (mask >> i) & 1;
        c[i] = negative ? -kHalf : kHalf;
        if (!negative) ++plus;
      }
      if ((plus % 2 == 0) == (target == Coset::Vplus)) out.push_back({Quaternion(c[0], c[1], c[2], c[3]), target});
    }
  }
  // V1, V2, V3: (1, e_k) and (e_i, e_j) with ijk cyclic
  const int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {3, 1}}, {{0, 3}, {1, 2}}};
  const Coset labels[3] = {Coset::V1, Coset::V2, Coset::V3};
  for (int k = 0; k < 3; ++k) {
    for (const auto& pr : pairs[k]) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          Quaternion q = QuadSqrt2(sa) * kInvSqrt2 * Quaternion::unit(pr[0]) + QuadSqrt2(sb) * kInvSqrt2 * Quaternion::unit(pr[1]);
          out.push_back({q, labels[k]});
        }
      }
    }
  }
  return out;
}

QuaternionPair QuaternionPair::canonical() const {
  for (int i = 0; i < 4; ++i) {
    int s = p[i].sign();
    if (s > 0) return *this;
    if (s < 0) return {-p, -q};
  }
  return *this;
}

QuaternionPair compose(const QuaternionPair& a, const QuaternionPair& b) { return {b.p * a.p, a.q * b.q}; }

std::vector<QuaternionPair> pair_group() {
  auto elements = binary_octahedral();
  const std::pair<Coset, Coset> blocks[] = {{Coset::V0, Coset::V0}, {Coset::Vplus, Coset::Vminus},
                                            {Coset::Vminus, Coset::Vplus}, {Coset::V1, Coset::V1},
                                            {Coset::V2, Coset::V2}, {Coset::V3, Coset::V3}};
  std::vector<QuaternionPair> out;
  for (const auto& [cp, cq] : blocks) {
    for (const auto& p : elements) {
      if (p.coset != cp) continue;
      for (const auto& q : elements) {
        if (q.coset != cq) continue;
        QuaternionPair g = QuaternionPair{p.value, q.value}.canonical();
        bool seen = false;
        for (const auto& h : out) {
          if (h == g) {
            seen = true;
            break;
          }
        }
        if (!seen) out.push_back(g);
      }
    }
  }
  return out;
}

SignedPerm pair_to_signed_perm7(const QuaternionPair& g) {
  std::vector<std::uint32_t> image(7);
  std::vector<int> signs(7);
  auto place = [&](int from_octonion_index, const Quaternion& value, const int* block_indices) {
    int found = -1;
    for (int m = 0; m < 4; ++m) {
      if (value[m].is_zero()) continue;
      if (found >= 0 || !(value[m] == QuadSqrt2(1) || value[m] == QuadSqrt2(-1)) || block_indices[m] == 0) {
        throw std::invalid_argument("pair_to_signed_perm7: pair does not act monomially on the octonion basis");
      }
      found = m;
    }
    if (found < 0) throw std::invalid_argument("pair_to_signed_perm7: zero image");
    image[from_octonion_index - 1] = static_cast<std::uint32_t>(block_indices[found] - 1);
    signs[from_octonion_index - 1] = value[found].sign();
  };
  // 3-block: quaternion units e1, e2, e3 are octonion e1, e2, e3; the scalar slot is invalid.
  const int imaginary_block[4] = {0, 1, 2, 3};
  const Quaternion p_bar = g.p.conjugate();
  for (int i = 1; i <= 3; ++i) place(i, g.p * Quaternion::unit(i) * p_bar, imaginary_block);
  // 4-block: e7 * (1, e1, e2, e3) = (e7, e4, e5, e6)
  const int e7_block[4] = {7, 4, 5, 6};
  for (int m = 0; m < 4; ++m) place(e7_block[m], g.apply(Quaternion::unit(m)), e7_block);
  return SignedPerm::from_images(std::move(image), std::move(signs));
}

}  // namespace octgroups
