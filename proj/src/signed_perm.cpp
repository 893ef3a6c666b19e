#include "octgroups/signed_perm.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>

namespace octgroups {

SignedPerm SignedPerm::identity(std::size_t degree) {
  std::vector<std::int16_t> packed(degree);
  std::iota(packed.begin(), packed.end(), std::int16_t{1});
  return SignedPerm(std::move(packed));
}

SignedPerm SignedPerm::diagonal(std::span<const int> signs) {
  std::vector<std::uint32_t> image(signs.size());
  std::iota(image.begin(), image.end(), 0U);
  return from_images(std::move(image), {signs.begin(), signs.end()});
}

SignedPerm SignedPerm::from_images(std::vector<std::uint32_t> image, std::vector<int> signs) {
  const std::size_t n = image.size();
  if (signs.size() != n) throw std::invalid_argument("SignedPerm: image and sign lengths differ");
  if (n > 32000) throw std::invalid_argument("SignedPerm: degree too large");
  std::vector<bool> hit(n, false);
  std::vector<std::int16_t> packed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] >= n || hit[image[i]]) throw std::invalid_argument("SignedPerm: image is not a bijection");
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("SignedPerm: signs must be +-1");
    hit[image[i]] = true;
    packed[i] = static_cast<std::int16_t>(signs[i] * static_cast<int>(image[i] + 1));
  }
  return SignedPerm(std::move(packed));
}

SignedPerm SignedPerm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> image(degree);
  std::iota(image.begin(), image.end(), 0U);
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      std::uint32_t a = cycle[t];
      std::uint32_t b = cycle[(t + 1) % cycle.size()];
      if (a < 1 || a > degree || b < 1 || b > degree) throw std::invalid_argument("SignedPerm: cycle point out of range");
      if (seen[a - 1]) throw std::invalid_argument("SignedPerm: point repeated in cycles");
      seen[a - 1] = true;
      image[a - 1] = b - 1;
    }
  }
  return from_images(std::move(image), std::vector<int>(degree, 1));
}

SignedPerm SignedPerm::parse(std::string_view text, std::size_t degree) {
  static const std::regex kCycle(R"(\(([^()]*)\))");
  static const std::regex kPoint(R"(([+-]?)\s*e(\d+))");
  static const std::regex kSeparators(R"([\s,]*)");

  std::vector<int> target(degree, 0);  // signed 1-based image of +e_i, 0 = unset
  std::string s(text);
  std::string leftover;
  auto cycles_begin = std::sregex_iterator(s.begin(), s.end(), kCycle);
  std::size_t cursor = 0;
  for (auto it = cycles_begin; it != std::sregex_iterator(); ++it) {
    leftover += s.substr(cursor, it->position() - cursor);
    cursor = it->position() + it->length();

    const std::string body = (*it)[1].str();
    std::vector<int> points;  // signed 1-based
    std::size_t body_cursor = 0;
    std::string body_rest;
    for (auto pt = std::sregex_iterator(body.begin(), body.end(), kPoint); pt != std::sregex_iterator(); ++pt) {
      body_rest += body.substr(body_cursor, pt->position() - body_cursor);
      body_cursor = pt->position() + pt->length();
      long idx = std::stol((*pt)[2].str());
      if (idx < 1 || static_cast<std::size_t>(idx) > degree) {
        throw std::invalid_argument("SignedPerm::parse: index out of range in '" + s + "'");
      }
      points.push_back((*pt)[1].str() == "-" ? -static_cast<int>(idx) : static_cast<int>(idx));
    }
    body_rest += body.substr(body_cursor);
    if (!std::regex_match(body_rest, kSeparators)) {
      throw std::invalid_argument("SignedPerm::parse: unexpected text in cycle '" + body + "'");
    }
    for (std::size_t t = 0; t < points.size(); ++t) {
      int from = points[t];
      int to = points[(t + 1) % points.size()];
      // s1 e_i -> s2 e_j is equivalent to e_i -> s1 s2 e_j.
      int i = std::abs(from) - 1;
      int mapped = (from < 0 ? -1 : 1) * to;
      if (target[i] != 0 && target[i] != mapped) {
        throw std::invalid_argument("SignedPerm::parse: inconsistent cycle for e" + std::to_string(i + 1) + " in '" + s + "'");
      }
      target[i] = mapped;
    }
  }
  leftover += s.substr(cursor);
  if (!std::regex_match(leftover, kSeparators)) {
    throw std::invalid_argument("SignedPerm::parse: text outside cycles in '" + s + "'");
  }
  std::vector<std::uint32_t> image(degree);
  std::vector<int> signs(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    int t = target[i] == 0 ? static_cast<int>(i + 1) : target[i];
    image[i] = static_cast<std::uint32_t>(std::abs(t) - 1);
    signs[i] = t < 0 ? -1 : 1;
  }
  try {
    return from_images(std::move(image), std::move(signs));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("SignedPerm::parse: cycles do not define a bijection in '" + s + "'");
  }
}

std::uint64_t SignedPerm::sign_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < degree() && i < 64; ++i) {
    if (packed_[i] < 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

SignedPerm compose(const SignedPerm& g, const SignedPerm& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::int16_t> out(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) {
    std::int16_t gi = g.packed_[i];
    std::int16_t hj = h.packed_[std::abs(gi) - 1];
    out[i] = gi < 0 ? static_cast<std::int16_t>(-hj) : hj;
  }
  return SignedPerm(std::move(out));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<std::int16_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    std::int16_t v = packed_[i];
    out[std::abs(v) - 1] = static_cast<std::int16_t>((v < 0 ? -1 : 1) * static_cast<int>(i + 1));
  }
  return SignedPerm(std::move(out));
}

SignedPerm SignedPerm::pow(long k) const {
  SignedPerm base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  SignedPerm result = identity(degree());
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    base = compose(base, base);
    e >>= 1UL;
  }
  return result;
}

std::size_t SignedPerm::order() const {
  // lcm over cycles of the underlying permutation, doubled for cycles whose sign product is -1
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    int product = 1;
    for (std::size_t j = i; !seen[j]; j = image(j)) {
      seen[j] = true;
      product *= sign(j);
      ++length;
    }
    result = std::lcm(result, product < 0 ? 2 * length : length);
  }
  return result;
}

SignedPerm SignedPerm::underlying_permutation() const {
  std::vector<std::int16_t> out(packed_);
  for (auto& v : out) v = static_cast<std::int16_t>(std::abs(v));
  return SignedPerm(std::move(out));
}

bool SignedPerm::is_diagonal() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (image(i) != i) return false;
  }
  return true;
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (packed_[i] != static_cast<std::int16_t>(i + 1)) return false;
  }
  return true;
}

int SignedPerm::trace() const {
  int t = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (image(i) == i) t += sign(i);
  }
  return t;
}

bool SignedPerm::is_even_on_signed_points() const {
  // A cycle of the underlying permutation with sign product +1 lifts to two
  // equal cycles (even); with product -1 it lifts to one cycle of double length (odd).
  std::vector<bool> seen(degree(), false);
  int odd = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int product = 1;
    for (std::size_t j = i; !seen[j]; j = image(j)) {
      seen[j] = true;
      product *= sign(j);
    }
    if (product < 0) ++odd;
  }
  return odd % 2 == 0;
}

std::vector<std::vector<int>> SignedPerm::matrix() const {
  std::vector<std::vector<int>> m(degree(), std::vector<int>(degree(), 0));
  for (std::size_t i = 0; i < degree(); ++i) m[i][image(i)] = sign(i);
  return m;
}

std::string SignedPerm::to_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    if (packed_[i] == static_cast<std::int16_t>(i + 1)) {
      seen[i] = true;
      continue;
    }
    // Follow the signed orbit of +e_i until it returns to +-e_i.
    std::string cycle = "(";
    int point = static_cast<int>(i + 1);
    bool first = true;
    do {
      std::size_t j = static_cast<std::size_t>(std::abs(point) - 1);
      seen[j] = true;
      if (!first) cycle += ' ';
      cycle += (point < 0 ? "-e" : "e") + std::to_string(j + 1);
      first = false;
      int next = packed_[j];
      point = point < 0 ? -next : next;
    } while (point != static_cast<int>(i + 1));
    out += cycle + ")";
  }
  return out.empty() ? "()" : out;
}

std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (auto c = a.image(i) <=> b.image(i); c != 0) return c;
  }
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (auto c = b.sign(i) <=> a.sign(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t SignedPerm::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : packed_) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace octgroups
