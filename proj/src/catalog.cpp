#include "octgroups/catalog.hpp"

#include <map>
#include <mutex>

#include "octgroups/quaternion.hpp"

namespace octgroups {

const std::vector<NamedGenerator>& named_generators() {
  static const std::vector<NamedGenerator> table = {
      {"alpha", "(e1 e2 e4 e3 e6 e5 e7)", "cyclic permutation of the seven units"},
      {"beta", "(e2 e4 e6)(e3 e7 e5)", "fixes e1, permutes the triad (e2 e4 e6)"},
      {"gamma", "(e1 -e4)(e2 -e5)(e3 -e3)(e7 -e7)", "e1 <-> -e4, e2 <-> -e5, e3 -> -e3, e6 fixed, e7 -> -e7"},
      {"N1", "(e4 -e4)(e5 -e5)(e6 -e6)(e7 -e7)", "diag(+,+,+,-,-,-,-)"},
      {"N2", "(e2 -e2)(e3 -e3)(e5 -e5)(e6 -e6)", "diag(+,-,-,+,-,-,+)"},
      {"N3", "(e2 -e2)(e3 -e3)(e4 -e4)(e7 -e7)", "N1 N2"},
      {"N4", "(e1 -e1)(e3 -e3)(e4 -e4)(e6 -e6)", "N7 N1"},
      {"N5", "(e1 -e1)(e2 -e2)(e6 -e6)(e7 -e7)", "N7 N2"},
      {"N6", "(e1 -e1)(e2 -e2)(e4 -e4)(e5 -e5)", "N7 N3"},
      {"N7", "(e1 -e1)(e3 -e3)(e5 -e5)(e7 -e7)", "diag(-,+,-,+,-,+,-)"},
      {"theta", "(e1 -e5)(e2 -e3 e4 -e7 -e2 e3 -e4 e7)(e6 -e6)", "order 8"},
      {"A", "(e1 -e7 e3 -e1 e7 -e3)(e2 -e4 -e6 -e2 e4 e6)(e5 -e5)", "as printed; not an octonion automorphism"},
      {"A_star", "(e1 -e7 e3 -e1 e7 -e3)(e2 -e4 e6)(-e2 e4 -e6)(e5 -e5)",
       "A with e4 -> -e6 instead of e4 -> e6; the only automorphism one sign away"},
      {"B", "(e2 -e6 -e2 e6)(e3 -e5 -e3 e5)", "order 4"},
      {"delta", "(e1 -e5)(e3 -e7)", "as printed; equals N7 gamma_t"},
      {"delta_star", "(e1 -e5)(e2 -e2)(e3 e7)(e4 -e4)", "N6 gamma_t; generates a second PSL2(7) with alpha_t, beta_t"},
      {"alpha_t", "(e1 e2 e4 e3 e6 e5 e7)", "alpha acting on N1..N7"},
      {"beta_t", "(e3 e2 e1)(e4 e6 e5)", "beta acting on N1..N7"},
      {"gamma_t", "(e1 e5)(e3 e7)", "gamma acting on N1..N7"},
      {"theta_t", "(e1 e4 e2 e5)(e6 e7)", "theta acting on N1..N7"},
      {"A_t", "(e1 e6 e2)(e3 e5 e4)", "A acting on N1..N7"},
      {"B_t", "(e1 e3)(e4 e6)", "B acting on N1..N7"},
  };
  return table;
}

SignedPerm generator(const std::string& name) {
  for (const auto& g : named_generators()) {
    if (g.name == name) return SignedPerm::parse(g.cycles, 7);
  }
  throw std::out_of_range("unknown generator: " + name);
}

std::vector<SignedPerm> diagonal_elements() {
  std::vector<SignedPerm> out;
  for (int i = 1; i <= 7; ++i) out.push_back(generator("N" + std::to_string(i)));
  return out;
}

Group diagonal_subgroup() { return Group::close({generator("N1"), generator("N2"), generator("N7")}); }

const std::vector<RosterEntry>& roster() {
  static const std::vector<RosterEntry> table = {
      {"7:3", {"alpha", "beta"}, 21, 5, "table1", "default", "Frobenius group"},
      {"2^3:7:3", {"alpha", "beta", "N1"}, 168, 8, "table2", "default", "maximal subgroup preserving the octonion algebra"},
      {"2^3.PSL2(7)", {"alpha", "gamma"}, 1344, 11, "table4", "nonsplit", "automorphism group of the octonion units +-e_i"},
      {"4.S4:2", {"gamma", "theta"}, 192, 14, "table5", "nonsplit", "stabilizer of +-e6"},
      {"2^3.S4", {"A_star", "B"}, 192, 13, "table7", "nonsplit", "stabilizer of the quaternion subalgebra on e1, e2, e3"},
      {"PSL2(7)", {"alpha_t", "beta_t", "gamma_t"}, 168, 6, "table3", "default", "quotient by 2^3, acting on N1..N7"},
      {"2^3:PSL2(7)", {"alpha_t", "beta_t", "gamma_t", "N1"}, 1344, 11, "table4", "split", "split extension"},
      {"PSL2(7)-second", {"alpha_t", "beta_t", "delta_star"}, 168, 6, "table3", "default", "second class of PSL2(7) in the split group"},
      {"2^3:S4", {"A_t", "B_t", "N1"}, 192, 14, "table5", "split", "order-192 subgroup of the split group"},
      {"4:S4:2", {"gamma_t", "theta_t", "N1"}, 192, 13, "table7", "split", "order-192 subgroup of the split group"},
      {"2^3.S4-pairs", {}, 192, 13, "table7", "nonsplit", "quaternion pairs [p, q] preserving V0"},
  };
  return table;
}

const RosterEntry& roster_entry(const std::string& name) {
  for (const auto& e : roster()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown group: " + name);
}

std::vector<SignedPerm> pair_group_images() {
  std::vector<SignedPerm> out;
  for (const auto& g : pair_group()) out.push_back(pair_to_signed_perm7(g));
  return out;
}

Group build(const std::string& name) {
  const RosterEntry& entry = roster_entry(name);
  std::vector<SignedPerm> gens;
  if (entry.generators.empty()) {
    gens = pair_group_images();
  } else {
    for (const auto& g : entry.generators) gens.push_back(generator(g));
  }
  Group G = Group::close(gens);
  if (G.order() != entry.expected_order || G.classes().size() != entry.expected_classes) {
    throw ExpectationFailure("build(" + name + "): got order " + std::to_string(G.order()) + " with " +
                             std::to_string(G.classes().size()) + " classes, expected " +
                             std::to_string(entry.expected_order) + " with " + std::to_string(entry.expected_classes));
  }
  return G;
}

std::shared_ptr<const Group> build_shared(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Group>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  auto G = std::make_shared<const Group>(build(name));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(name, std::move(G)).first->second;
}

}  // namespace octgroups
