#pragma once

// Named generators and named group constructions.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octgroups/group.hpp"
#include "octgroups/signed_perm.hpp"

namespace octgroups {

struct NamedGenerator {
  std::string name;
  std::string cycles;  // signed-cycle notation, degree 7
  std::string note;
};

/// All named generators in a fixed order.
const std::vector<NamedGenerator>& named_generators();

/// Throws std::out_of_range for an unknown name.
SignedPerm generator(const std::string& name);

/// N1..N7, the non-identity elements of the diagonal subgroup 2^3.
std::vector<SignedPerm> diagonal_elements();

/// <N1, N2, N7>
Group diagonal_subgroup();

struct RosterEntry {
  std::string name;
  std::vector<std::string> generators;  // empty for the quaternion-pair construction
  std::size_t expected_order = 0;
  std::size_t expected_classes = 0;
  std::string golden_table;    // file stem under the golden directory
  std::string orders_variant;  // which "orders" header of that table applies
  std::string description;
};

const std::vector<RosterEntry>& roster();

/// Throws std::out_of_range for an unknown name.
const RosterEntry& roster_entry(const std::string& name);

class ExpectationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closure of the named generators. Throws ExpectationFailure if the order or
/// class count differs from the roster entry.
Group build(const std::string& name);

/// Memoized build() shared across callers in one process.
std::shared_ptr<const Group> build_shared(const std::string& name);

/// Image of pair_group() under pair_to_signed_perm7, as generators.
std::vector<SignedPerm> pair_group_images();

}  // namespace octgroups
