#include "octgroups/character.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace octgroups {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  throw std::runtime_error("primitive_root: none found");
}

using Vec = std::vector<u64>;

// Row-reduced basis of a subspace of GF(p)^r; pivots[t] is the leading column of rows[t].
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Subspace row_reduce(std::vector<Vec> rows, u64 p) {
  Subspace out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 inv = invmod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = mulmod(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      u64 f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p - mulmod(f, rows[rank][k], p)) % p;
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

// Null space of a square matrix (list of rows) as a list of vectors.
std::vector<Vec> null_space(std::vector<Vec> m, u64 p) {
  const std::size_t n = m.size();
  Subspace rref = row_reduce(std::move(m), p);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rref.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t t = 0; t < rref.rows.size(); ++t) v[rref.pivots[t]] = (p - rref.rows[t][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits W into eigenspaces of the (invariant) matrix M acting on column vectors.
std::vector<Subspace> split(const Subspace& W, const std::vector<Vec>& M, u64 p) {
  const std::size_t d = W.rows.size();
  const std::size_t r = M.size();
  // A[u][t] = coordinate u of M * b_t
  std::vector<Vec> A(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t u = 0; u < d; ++u) {
      std::size_t i = W.pivots[u];
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k) s = (s + mulmod(M[i][k], W.rows[t][k], p)) % p;
      A[u][t] = s;
    }
  }
  bool scalar = true;
  for (std::size_t u = 0; u < d && scalar; ++u) {
    for (std::size_t t = 0; t < d; ++t) {
      if (u != t && A[u][t] != 0) scalar = false;
      if (A[u][u] != A[0][0]) scalar = false;
    }
  }
  if (scalar) return {W};

  std::vector<Subspace> pieces;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < p && total < d; ++lambda) {
    std::vector<Vec> shifted = A;
    for (std::size_t u = 0; u < d; ++u) shifted[u][u] = (shifted[u][u] + p - lambda) % p;
    std::vector<Vec> kernel = null_space(std::move(shifted), p);
    if (kernel.empty()) continue;
    std::vector<Vec> vectors;
    for (const auto& c : kernel) {
      Vec v(r, 0);
      for (std::size_t t = 0; t < d; ++t) {
        if (c[t] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mulmod(c[t], W.rows[t][k], p)) % p;
      }
      vectors.push_back(std::move(v));
    }
    total += kernel.size();
    pieces.push_back(row_reduce(std::move(vectors), p));
  }
  if (total != d) throw std::runtime_error("character_table: class matrix is not diagonalizable over GF(p)");
  return pieces;
}

Cyclotomic conj(const Cyclotomic& x) { return x.conjugate(); }

}  // namespace

std::vector<std::string> CharacterRow::value_strings() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

ClassAlgebra class_algebra(const Group& G) {
  const auto& classes = G.classes();
  const std::size_t r = classes.size();
  ClassAlgebra a(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t z = classes[k].members.front();
    for (std::size_t x = 0; x < G.order(); ++x) {
      std::size_t y = G.multiply(G.inverse(x), z);
      ++a.at(G.class_of(x), G.class_of(y), k);
    }
  }
  return a;
}

std::uint64_t smallest_prime_one_mod(std::uint64_t e, std::uint64_t bound) {
  for (std::uint64_t p = e + 1; p < e * 1'000'000 + 2; p += e) {
    if (p > bound && is_prime(p)) return p;
  }
  throw std::runtime_error("smallest_prime_one_mod: no suitable prime found");
}

CharacterTable character_table(const Group& G) {
  const auto& classes = G.classes();
  const std::size_t r = classes.size();
  const u64 order = G.order();
  const u64 exponent = G.exponent();
  const u64 root_bound = static_cast<u64>(std::floor(std::sqrt(static_cast<double>(order))));
  const u64 p = smallest_prime_one_mod(exponent, 2 * root_bound);
  const u64 gp = primitive_root(p);

  CharacterTable T;
  T.group_order = order;
  T.prime = p;
  for (const auto& c : classes) T.classes.push_back({c.representative, c.size, c.element_order});
  T.inverse_class.resize(r);
  for (std::size_t k = 0; k < r; ++k) T.inverse_class[k] = G.class_of(G.inverse(classes[k].members.front()));
  for (u64 q : prime_factors(exponent)) T.power_maps[static_cast<long>(q)] = G.power_map(static_cast<long>(q));
  T.power_maps[2] = G.power_map(2);

  // Split GF(p)^r into common eigenspaces of M_j, (M_j)_{ik} = a(j,i,k).
  ClassAlgebra a = class_algebra(G);
  std::vector<Subspace> spaces;
  {
    std::vector<Vec> identity(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
    spaces.push_back(row_reduce(std::move(identity), p));
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.rows.size() == 1; })) break;
    std::vector<Vec> M(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) M[i][k] = a(j, i, k) % p;
    }
    std::vector<Subspace> next;
    for (const auto& W : spaces) {
      if (W.rows.size() == 1) {
        next.push_back(W);
        continue;
      }
      for (auto& piece : split(W, M, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::runtime_error("character_table: eigenspaces did not split into one-dimensional pieces");

  // Classes of g^t for each class representative g, t in [0, order).
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t g = classes[k].members.front();
    for (std::size_t t = 0; t < classes[k].element_order; ++t) {
      power_classes[k].push_back(G.class_of(G.power(g, static_cast<long>(t))));
    }
  }

  for (const auto& W : spaces) {
    Vec w = W.rows.front();
    if (w[0] == 0) throw std::runtime_error("character_table: central character vanishes at the identity");
    u64 scale = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, scale, p);

    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = (s + mulmod(mulmod(w[k], w[T.inverse_class[k]], p), invmod(classes[k].size % p, p), p)) % p;
    }
    u64 d_squared = mulmod(order % p, invmod(s, p), p);
    long degree = 0;
    for (u64 d = 1; d <= root_bound; ++d) {
      if (order % d == 0 && mulmod(d, d, p) == d_squared) {
        degree = static_cast<long>(d);
        break;
      }
    }
    if (degree == 0) throw std::runtime_error("character_table: no degree matches the norm of a central character");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = mulmod(mulmod(static_cast<u64>(degree), w[k], p), invmod(classes[k].size % p, p), p);
    }

    CharacterRow row;
    row.degree = degree;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = classes[k].element_order;
      const u64 z = powmod(gp, (p - 1) / o, p);
      const u64 o_inv = invmod(o % p, p);
      std::vector<Rational> multiplicities(o);
      u64 total = 0;
      for (u64 l = 0; l < o; ++l) {
        u64 m = 0;
        for (u64 t = 0; t < o; ++t) {
          u64 exponent_lt = (o - (l * t) % o) % o;
          m = (m + mulmod(chi[power_classes[k][t]], powmod(z, exponent_lt, p), p)) % p;
        }
        m = mulmod(m, o_inv, p);
        if (m > static_cast<u64>(degree)) throw std::runtime_error("character_table: eigenvalue multiplicity out of range");
        multiplicities[l] = Rational(static_cast<long>(m));
        total += m;
      }
      if (total != static_cast<u64>(degree)) throw std::runtime_error("character_table: multiplicities do not sum to the degree");
      Cyclotomic value = Cyclotomic::from_dense(static_cast<long>(o), multiplicities);
      if (value.reduce_mod(p, gp) != chi[k]) throw std::runtime_error("character_table: lifted value fails the modular check");
      row.values.push_back(std::move(value));
    }
    T.irreps.push_back(std::move(row));
  }

  std::sort(T.irreps.begin(), T.irreps.end(), [](const CharacterRow& x, const CharacterRow& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.value_strings() < y.value_strings();
  });
  return T;
}

CharacterRow natural_character(const Group& G) {
  CharacterRow row;
  row.degree = static_cast<long>(G.degree());
  for (const auto& c : G.classes()) row.values.emplace_back(static_cast<long>(c.representative.trace()));
  return row;
}

Rational inner_product(const CharacterRow& chi, const CharacterRow& psi, const CharacterTable& T) {
  Cyclotomic sum;
  for (std::size_t k = 0; k < T.classes.size(); ++k) {
    sum += Cyclotomic(static_cast<long>(T.classes[k].size)) * chi.values[k] * conj(psi.values[k]);
  }
  return sum.to_rational() / Rational(static_cast<long>(T.group_order));
}

std::vector<long> decompose(const CharacterRow& chi, const CharacterTable& T) {
  std::vector<long> out;
  for (const auto& irrep : T.irreps) {
    Rational m = inner_product(chi, irrep, T);
    if (m.get_den() != 1 || m < 0) throw std::domain_error("decompose: multiplicity " + to_string(m) + " is not a non-negative integer");
    out.push_back(m.get_num().get_si());
  }
  return out;
}

CharacterRow product(const CharacterRow& chi, const CharacterRow& psi) {
  CharacterRow out;
  out.degree = chi.degree * psi.degree;
  for (std::size_t k = 0; k < chi.values.size(); ++k) out.values.push_back(chi.values[k] * psi.values[k]);
  return out;
}

std::vector<long> tensor_decompose(std::size_t i, std::size_t j, const CharacterTable& T) {
  if (i >= T.irreps.size() || j >= T.irreps.size()) throw std::out_of_range("tensor_decompose: irrep index out of range");
  return decompose(product(T.irreps[i], T.irreps[j]), T);
}

std::vector<std::size_t> class_fusion(const Group& G, const Group& H) {
  std::vector<std::size_t> fusion;
  for (const auto& c : H.classes()) {
    auto idx = G.index_of(c.representative);
    if (!idx) throw std::invalid_argument("class_fusion: element " + c.representative.to_string() + " of H is not in G");
    fusion.push_back(G.class_of(*idx));
  }
  return fusion;
}

CharacterRow restrict(const CharacterRow& chi, const std::vector<std::size_t>& fusion, const Group& H) {
  CharacterRow out;
  out.degree = chi.degree;
  for (std::size_t k = 0; k < H.classes().size(); ++k) out.values.push_back(chi.values[fusion[k]]);
  return out;
}

std::vector<std::vector<long>> branch(const Group& G, const Group& H, const CharacterTable& TG, const CharacterTable& TH) {
  auto fusion = class_fusion(G, H);
  std::vector<std::vector<long>> out;
  for (const auto& chi : TG.irreps) out.push_back(decompose(restrict(chi, fusion, H), TH));
  return out;
}

int frobenius_schur(const CharacterRow& chi, const CharacterTable& T) {
  const auto& squares = T.power_maps.at(2);
  Cyclotomic sum;
  for (std::size_t k = 0; k < T.classes.size(); ++k) {
    sum += Cyclotomic(static_cast<long>(T.classes[k].size)) * chi.values[squares[k]];
  }
  Rational v = sum.to_rational() / Rational(static_cast<long>(T.group_order));
  if (v.get_den() != 1) throw std::domain_error("frobenius_schur: indicator is not an integer");
  return static_cast<int>(v.get_num().get_si());
}

}  // namespace octgroups
