#pragma once

// Character tables by the Dixon-Schneider method: the class matrices are
// split into common eigenspaces over GF(p), p = 1 mod exponent, and the
// resulting characters are lifted to cyclotomic numbers through the
// eigenvalue multiplicities of each class representative.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "octgroups/cyclotomic.hpp"
#include "octgroups/group.hpp"

namespace octgroups {

struct ClassInfo {
  SignedPerm representative;
  std::size_t size = 0;
  std::size_t element_order = 0;
};

struct CharacterRow {
  long degree = 0;
  std::vector<Cyclotomic> values;  // indexed by class

  std::vector<std::string> value_strings() const;
};

/// C_i C_j = sum_k a(i,j,k) C_k in the centre of the group algebra.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(std::size_t classes) : r_(classes), a_(classes * classes * classes, 0) {}
  std::size_t classes() const { return r_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * r_ + j) * r_ + k]; }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::uint64_t> a_;
};

struct CharacterTable {
  std::size_t group_order = 0;
  std::vector<ClassInfo> classes;
  std::vector<std::size_t> inverse_class;  // class of g^-1
  std::map<long, std::vector<std::size_t>> power_maps;  // k = 2 and each prime dividing the exponent
  std::vector<CharacterRow> irreps;  // degree ascending, then value strings
  std::uint64_t prime = 0;           // the field GF(p) used for splitting
};

/// Counts, for each class representative z_k and each x in C_i, whether x^-1 z_k lies in C_j.
ClassAlgebra class_algebra(const Group& G);

/// Smallest prime p = 1 mod e with p > bound (deterministic trial division).
std::uint64_t smallest_prime_one_mod(std::uint64_t e, std::uint64_t bound);

/// Throws std::runtime_error if an eigenspace fails to split or a lift fails
/// its modular check; neither can happen for a correct class algebra.
CharacterTable character_table(const Group& G);

/// Trace of each class representative in the defining signed-permutation representation.
CharacterRow natural_character(const Group& G);

/// (1/|G|) sum_k |C_k| chi(k) conj(psi(k))
Rational inner_product(const CharacterRow& chi, const CharacterRow& psi, const CharacterTable& T);

/// Multiplicity of each irrep of T in chi. Throws std::domain_error if a
/// multiplicity is not a non-negative integer.
std::vector<long> decompose(const CharacterRow& chi, const CharacterTable& T);

CharacterRow product(const CharacterRow& chi, const CharacterRow& psi);

/// Multiplicities of every irrep in irreps[i] x irreps[j].
std::vector<long> tensor_decompose(std::size_t i, std::size_t j, const CharacterTable& T);

/// For each class of H, the class of G containing it.
std::vector<std::size_t> class_fusion(const Group& G, const Group& H);

/// Restriction of a G-character to H along the class fusion.
CharacterRow restrict(const CharacterRow& chi, const std::vector<std::size_t>& fusion, const Group& H);

/// rows: irreps of G; columns: multiplicities of irreps of H.
std::vector<std::vector<long>> branch(const Group& G, const Group& H, const CharacterTable& TG, const CharacterTable& TH);

/// (1/|G|) sum_g chi(g^2), via the squaring power map.
int frobenius_schur(const CharacterRow& chi, const CharacterTable& T);

}  // namespace octgroups
