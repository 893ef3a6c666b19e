#pragma once

// Finite groups of signed permutations: closure, conjugacy classes, power
// maps, normality, quotients, complement search and subgroup conjugacy.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "octgroups/signed_perm.hpp"

namespace octgroups {

struct ConjugacyClass {
  SignedPerm representative;  // canonical minimum of the class
  std::size_t size = 0;
  std::size_t element_order = 0;
  std::vector<std::size_t> members;  // indices into Group::elements()
};

class Group {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;
  static constexpr std::size_t kTableLimit = 4096;

  /// Breadth-first closure. Throws std::length_error past `cap` elements and
  /// std::invalid_argument on empty or mixed-degree generator lists.
  static Group close(const std::vector<SignedPerm>& generators, std::size_t cap = kDefaultCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.front().degree(); }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  const std::vector<SignedPerm>& generators() const { return generators_; }
  const SignedPerm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const SignedPerm& g) const;
  bool contains(const SignedPerm& g) const { return index_of(g).has_value(); }
  std::size_t identity_index() const { return 0; }

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t power(std::size_t i, long k) const;
  std::size_t element_order(std::size_t i) const { return orders_[i]; }
  std::size_t exponent() const;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_histogram() const;

  /// Sorted by (element order, size, representative).
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t class_of(const SignedPerm& g) const;
  /// Class of g^k as a function of the class of g.
  std::vector<std::size_t> power_map(long k) const;

 private:
  Group() = default;
  void build_tables();
  void build_classes();

  std::vector<SignedPerm> elements_;
  std::vector<SignedPerm> generators_;
  std::unordered_map<SignedPerm, std::size_t, SignedPermHash> index_;
  std::vector<std::uint32_t> table_;  // row-major product table when order <= kTableLimit
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Closure of `generators` inside G; throws std::invalid_argument if one is not in G.
Group subgroup(const Group& G, const std::vector<SignedPerm>& generators);

/// H subset of G as element sets.
bool is_subgroup(const Group& G, const Group& H);

/// g^-1 H g = H for every generator g of G.
bool is_normal(const Group& G, const Group& H);

/// Permutation of `labels` induced by x -> g^-1 x g: i maps to j when
/// g^-1 labels[i] g = labels[j]. A homomorphism under left-to-right composition.
SignedPerm conjugation_action(const SignedPerm& g, const std::vector<SignedPerm>& labels);

/// G/N. With `labels` (the non-identity elements of N, in a chosen order) the
/// quotient is the conjugation action on them; otherwise the action of G on the
/// right cosets Ng, in the order of their minimal elements. Throws
/// std::invalid_argument if N is not normal, or if the labeled action is not
/// faithful on G/N.
Group quotient(const Group& G, const Group& N, const std::vector<SignedPerm>& labels = {});

/// Generator profiles for which a pair search is complete.
enum class ComplementProfile {
  psl27,  // x^2 = y^3 = (xy)^7 = 1, quotient order 168
  s4,     // x^4 = y^3 = (xy)^2 = 1, quotient order 24
};

/// Searches every pair (x, y) of elements of G with the profile's orders for a
/// subgroup H = <x, y> with |H| = |G|/|N| and H meet N = 1.
/// Throws std::invalid_argument when |G|/|N| does not match the profile.
std::optional<Group> find_complement(const Group& G, const Group& N, ComplementProfile profile);

/// Some g in G with g^-1 H1 g = H2.
bool are_conjugate_subgroups(const Group& G, const Group& H1, const Group& H2);

}  // namespace octgroups
