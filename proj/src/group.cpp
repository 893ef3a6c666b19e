#include "octgroups/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace octgroups {

Group Group::close(const std::vector<SignedPerm>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("Group::close: no generators");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("Group::close: generators have different degrees");
  }
  std::unordered_map<SignedPerm, std::size_t, SignedPermHash> seen;
  std::vector<SignedPerm> found{SignedPerm::identity(n)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : generators) {
      SignedPerm next = compose(found[head], s);
      if (seen.count(next)) continue;
      if (found.size() >= cap) {
        throw std::length_error("Group::close: more than " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());

  Group G;
  G.elements_ = std::move(found);
  G.generators_ = generators;
  G.index_.reserve(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i) G.index_.emplace(G.elements_[i], i);
  G.build_tables();
  G.build_classes();
  return G;
}

std::optional<std::size_t> Group::index_of(const SignedPerm& g) const {
  if (g.degree() != degree()) return std::nullopt;
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::multiply(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * order() + j];
  return index_.at(compose(elements_[i], elements_[j]));
}

std::size_t Group::power(std::size_t i, long k) const {
  std::size_t base = k < 0 ? inverse_[i] : i;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k) % orders_[i];
  std::size_t result = identity_index();
  while (e > 0) {
    if (e & 1UL) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1UL;
  }
  return result;
}

void Group::build_tables() {
  const std::size_t n = order();
  if (elements_.front() != SignedPerm::identity(degree())) throw std::logic_error("identity is not the first element");
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table_[i * n + j] = static_cast<std::uint32_t>(index_.at(compose(elements_[i], elements_[j])));
      }
    }
  }
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
}

void Group::build_classes() {
  const std::size_t n = order();
  std::vector<std::size_t> gens;
  for (const auto& s : generators_) gens.push_back(index_.at(s));
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> orbit{start};
    done[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t s : gens) {
        std::size_t y = multiply(multiply(inverse_[s], orbit[head]), s);
        if (!done[y]) {
          done[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  // Index order equals canonical element order, so orbit.front() is the minimum.
  std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
    if (orders_[a.front()] != orders_[b.front()]) return orders_[a.front()] < orders_[b.front()];
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  class_of_.assign(n, 0);
  classes_.clear();
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ConjugacyClass cls;
    cls.representative = elements_[orbits[c].front()];
    cls.size = orbits[c].size();
    cls.element_order = orders_[orbits[c].front()];
    cls.members = orbits[c];
    for (std::size_t m : cls.members) class_of_[m] = c;
    classes_.push_back(std::move(cls));
  }
}

std::size_t Group::class_of(const SignedPerm& g) const {
  auto idx = index_of(g);
  if (!idx) throw std::invalid_argument("Group::class_of: element not in group");
  return class_of_[*idx];
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (std::size_t o : orders_) e = std::lcm(e, o);
  return e;
}

std::map<std::size_t, std::size_t> Group::order_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t o : orders_) ++h[o];
  return h;
}

std::vector<std::size_t> Group::power_map(long k) const {
  std::vector<std::size_t> map(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    map[c] = class_of_[power(classes_[c].members.front(), k)];
  }
  return map;
}

Group subgroup(const Group& G, const std::vector<SignedPerm>& generators) {
  for (const auto& g : generators) {
    if (!G.contains(g)) throw std::invalid_argument("subgroup: generator " + g.to_string() + " is not in the group");
  }
  return Group::close(generators, G.order());
}

bool is_subgroup(const Group& G, const Group& H) {
  for (const auto& h : H.elements()) {
    if (!G.contains(h)) return false;
  }
  return true;
}

bool is_normal(const Group& G, const Group& H) {
  for (const auto& g : G.generators()) {
    for (const auto& h : H.generators()) {
      if (!H.contains(conjugate(h, g))) return false;
    }
  }
  return true;
}

SignedPerm conjugation_action(const SignedPerm& g, const std::vector<SignedPerm>& labels) {
  std::vector<std::uint32_t> image(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    SignedPerm y = conjugate(labels[i], g);
    auto it = std::find(labels.begin(), labels.end(), y);
    if (it == labels.end()) throw std::invalid_argument("conjugation_action: labels are not closed under conjugation");
    image[i] = static_cast<std::uint32_t>(it - labels.begin());
  }
  return SignedPerm::from_images(std::move(image), std::vector<int>(labels.size(), 1));
}

Group quotient(const Group& G, const Group& N, const std::vector<SignedPerm>& labels) {
  if (!is_subgroup(G, N) || !is_normal(G, N)) throw std::invalid_argument("quotient: subgroup is not normal");
  std::vector<SignedPerm> images;
  if (!labels.empty()) {
    for (const auto& l : labels) {
      if (!N.contains(l) || l.is_identity()) throw std::invalid_argument("quotient: labels must be non-identity elements of N");
    }
    for (const auto& g : G.generators()) images.push_back(conjugation_action(g, labels));
    Group Q = Group::close(images);
    if (Q.order() * N.order() != G.order()) {
      throw std::invalid_argument("quotient: conjugation action on the labels is not faithful on G/N");
    }
    return Q;
  }
  // Right cosets Ng, numbered by their minimal element.
  const std::size_t n = G.order();
  std::vector<std::size_t> n_index;
  for (const auto& x : N.elements()) n_index.push_back(*G.index_of(x));
  std::vector<long> coset_of(n, -1);
  std::size_t cosets = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    for (std::size_t x : n_index) coset_of[G.multiply(x, g)] = static_cast<long>(cosets);
    ++cosets;
  }
  std::vector<std::size_t> coset_rep(cosets);
  for (std::size_t g = n; g-- > 0;) coset_rep[static_cast<std::size_t>(coset_of[g])] = g;
  for (const auto& s : G.generators()) {
    std::size_t si = *G.index_of(s);
    std::vector<std::uint32_t> image(cosets);
    for (std::size_t c = 0; c < cosets; ++c) {
      image[c] = static_cast<std::uint32_t>(coset_of[G.multiply(coset_rep[c], si)]);
    }
    images.push_back(SignedPerm::from_images(std::move(image), std::vector<int>(cosets, 1)));
  }
  return Group::close(images);
}

namespace {

// Closure of <x, y> inside G by indices; stops once more than `limit` elements are found.
std::vector<std::size_t> close_indices(const Group& G, std::size_t x, std::size_t y, std::size_t limit) {
  std::vector<char> seen(G.order(), 0);
  std::vector<std::size_t> found{G.identity_index()};
  seen[G.identity_index()] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s : {x, y}) {
      std::size_t z = G.multiply(found[head], s);
      if (seen[z]) continue;
      seen[z] = 1;
      found.push_back(z);
      if (found.size() > limit) return found;
    }
  }
  return found;
}

}  // namespace

std::optional<Group> find_complement(const Group& G, const Group& N, ComplementProfile profile) {
  std::size_t ox = 0, oy = 0, oxy = 0, q = 0;
  switch (profile) {
    case ComplementProfile::psl27: ox = 2; oy = 3; oxy = 7; q = 168; break;
    case ComplementProfile::s4: ox = 4; oy = 3; oxy = 2; q = 24; break;
  }
  if (G.order() != q * N.order()) throw std::invalid_argument("find_complement: quotient order does not match the profile");
  std::vector<char> in_n(G.order(), 0);
  for (const auto& x : N.elements()) {
    auto idx = G.index_of(x);
    if (!idx) throw std::invalid_argument("find_complement: N is not a subgroup of G");
    in_n[*idx] = 1;
  }
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (G.element_order(i) == ox) xs.push_back(i);
    if (G.element_order(i) == oy) ys.push_back(i);
  }
  for (std::size_t x : xs) {
    for (std::size_t y : ys) {
      if (G.element_order(G.multiply(x, y)) != oxy) continue;
      std::vector<std::size_t> H = close_indices(G, x, y, q);
      if (H.size() != q) continue;
      bool trivial_meet = std::none_of(H.begin(), H.end(), [&](std::size_t h) { return h != G.identity_index() && in_n[h]; });
      if (trivial_meet) return Group::close({G.element(x), G.element(y)});
    }
  }
  return std::nullopt;
}

bool are_conjugate_subgroups(const Group& G, const Group& H1, const Group& H2) {
  if (H1.order() != H2.order()) return false;
  std::vector<char> in_h2(G.order(), 0);
  std::vector<std::size_t> h1;
  for (const auto& x : H2.elements()) {
    auto idx = G.index_of(x);
    if (!idx) throw std::invalid_argument("are_conjugate_subgroups: H2 is not in G");
    in_h2[*idx] = 1;
  }
  for (const auto& x : H1.elements()) {
    auto idx = G.index_of(x);
    if (!idx) throw std::invalid_argument("are_conjugate_subgroups: H1 is not in G");
    h1.push_back(*idx);
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::size_t gi = G.inverse(g);
    bool all = std::all_of(h1.begin(), h1.end(), [&](std::size_t h) { return in_h2[G.multiply(G.multiply(gi, h), g)]; });
    if (all) return true;
  }
  return false;
}

}  // namespace octgroups
