#include "octgroups/octonion.hpp"

#include <regex>
#include <stdexcept>

namespace octgroups {

StructureConstants::StructureConstants() {
  for (const auto& t : kSeedTriples) {
    for (int r = 0; r < 3; ++r) {
      int i = t[r], j = t[(r + 1) % 3], k = t[(r + 2) % 3];
      phi_[i][j][k] = 1;
      phi_[j][i][k] = -1;
    }
  }
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      for (int k = 1; k <= 7; ++k) {
        if (phi_[i][j][k] != 0) {
          index_[i][j] = k;
          sign_[i][j] = phi_[i][j][k];
        }
      }
    }
  }
}

const StructureConstants& StructureConstants::instance() {
  static const StructureConstants table;
  return table;
}

Octonion Octonion::unit(int i, const Rational& coefficient) {
  if (i < 0 || i > 7) throw std::out_of_range("Octonion::unit: index must be in [0,7]");
  Octonion x;
  x.c_[i] = coefficient;
  return x;
}

Octonion Octonion::parse(std::string_view text) {
  static const std::regex kTerm(R"(\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(e[1-7])?\s*)");
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) throw std::invalid_argument("Octonion::parse: empty input");
  Octonion result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::smatch m;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, kTerm, std::regex_constants::match_continuous) || m.length() == 0 ||
        (!m[2].matched && !m[3].matched) || (!first && !m[1].matched)) {
      throw std::invalid_argument("Octonion::parse: cannot read '" + s + "' at position " + std::to_string(pos));
    }
    Rational coefficient = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    if (m[1].str() == "-") coefficient = -coefficient;
    int index = m[3].matched ? m[3].str()[1] - '0' : 0;
    result.c_[index] += coefficient;
    pos += m.length();
    first = false;
  }
  return result;
}

Octonion Octonion::conjugate() const {
  Octonion x = *this;
  for (int i = 1; i < 8; ++i) x.c_[i] = -x.c_[i];
  return x;
}

Rational Octonion::norm() const {
  Rational n = 0;
  for (const auto& q : c_) n += q * q;
  return n;
}

bool Octonion::is_zero() const {
  for (const auto& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Octonion operator-(const Octonion& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = -a.c_[i];
  return r;
}

Octonion operator*(const Rational& s, const Octonion& a) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c_[i] = s * a.c_[i];
  return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  const auto& table = StructureConstants::instance();
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c_[j] == 0) continue;
      Rational p = a.c_[i] * b.c_[j];
      if (i == 0) {
        r.c_[j] += p;
      } else if (j == 0) {
        r.c_[i] += p;
      } else if (i == j) {
        r.c_[0] -= p;
      } else if (table.product_sign(i, j) > 0) {
        r.c_[table.product_index(i, j)] += p;
      } else {
        r.c_[table.product_index(i, j)] -= p;
      }
    }
  }
  return r;
}

std::string Octonion::to_string() const {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational magnitude = abs(q);
    std::string piece;
    if (i == 0) {
      piece = octgroups::to_string(magnitude);
    } else {
      piece = magnitude == 1 ? "" : octgroups::to_string(magnitude) + "*";
      piece += "e" + std::to_string(i);
    }
    if (out.empty()) {
      out = (q < 0 ? "-" : "") + piece;
    } else {
      out += (q < 0 ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) { return (a * b) * c - a * (b * c); }

TriadType triad_type(int i, int j, int k) {
  for (int v : {i, j, k}) {
    if (v < 1 || v > 7) throw std::invalid_argument("triad_type: index out of range");
  }
  if (i == j || j == k || i == k) throw std::invalid_argument("triad_type: indices must be distinct");
  return StructureConstants::instance().phi(i, j, k) != 0 ? TriadType::associative : TriadType::anti_associative;
}

Octonion apply(const SignedPerm& g, const Octonion& x) {
  if (g.degree() != 7) throw std::invalid_argument("apply: signed permutation must have degree 7");
  std::array<Rational, 8> c{};
  c[0] = x[0];
  for (int i = 1; i <= 7; ++i) {
    std::size_t src = static_cast<std::size_t>(i - 1);
    int target = static_cast<int>(g.image(src)) + 1;
    c[target] += g.sign(src) * x[i];
  }
  return Octonion(c);
}

bool is_algebra_automorphism(const SignedPerm& g) {
  if (g.degree() != 7) throw std::invalid_argument("is_algebra_automorphism: degree must be 7");
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      Octonion ei = Octonion::unit(i), ej = Octonion::unit(j);
      if (apply(g, ei) * apply(g, ej) != apply(g, ei * ej)) return false;
    }
  }
  return true;
}

}  // namespace octgroups
