#include "octgroups/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace octgroups {
namespace {

struct PrimePower {
  long p;
  int e;
  long pe;
};

std::vector<PrimePower> factorize(long n) {
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.pe *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

long mod(long a, long n) {
  a %= n;
  return a < 0 ? a + n : a;
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod(x, m);
}

// i-digit of the p-component of zeta_n^k (see header comment).
long component_digit(long k, long n, const PrimePower& pp) {
  long cofactor = n / pp.pe;
  long a = mod((k % pp.pe) * inverse_mod(cofactor % pp.pe, pp.pe), pp.pe);
  return a / (pp.pe / pp.p);
}

void to_zumbroich(long n, std::vector<Rational>& dense) {
  for (const auto& pp : factorize(n)) {
    const long step = n / pp.p;
    for (long k = 0; k < n; ++k) {
      if (dense[k] == 0) continue;
      long i = component_digit(k, n, pp);
      if (pp.p == 2) {
        if (i == 1) {
          dense[mod(k - step, n)] -= dense[k];
          dense[k] = 0;
        }
      } else if (i == 0) {
        const Rational c = dense[k];
        for (long t = 1; t < pp.p; ++t) dense[(k + t * step) % n] -= c;
        dense[k] = 0;
      }
    }
  }
}

// Tries to rewrite a Zumbroich-form vector over Q(zeta_n) as one over
// Q(zeta_{n/p}). Returns false when the value is not in the subfield.
bool try_descend(long n, const PrimePower& pp, std::vector<Rational>& dense) {
  const long p = pp.p;
  std::vector<Rational> out(n / p);
  if (p == 2 && pp.e == 1) {
    for (long k = 0; k < n; ++k) {
      if (dense[k] == 0) continue;
      if (k % 2 != 0) throw std::logic_error("cyclotomic: odd exponent left at n = 2 mod 4");
      out[k / 2] = dense[k];
    }
  } else if (pp.e >= 2) {
    for (long k = 0; k < n; ++k) {
      if (dense[k] == 0) continue;
      if (k % p != 0) return false;
      out[k / p] = dense[k];
    }
  } else {
    const long step = n / p;
    for (long k0 = 0; k0 < n; ++k0) {
      if (component_digit(k0, n, pp) != 0) continue;
      const Rational& c = dense[(k0 + step) % n];
      for (long t = 2; t < p; ++t) {
        if (dense[(k0 + t * step) % n] != c) return false;
      }
      if (c != 0) out[k0 / p] = -c;
    }
  }
  dense = std::move(out);
  return true;
}

}  // namespace

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) terms_.emplace_back(0, value);
}

Cyclotomic Cyclotomic::root(long k, long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic root: n must be positive");
  std::vector<Rational> dense(n);
  dense[mod(k, n)] = 1;
  return from_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_dense(long n, std::vector<Rational> dense) {
  if (n < 1 || static_cast<long>(dense.size()) != n) {
    throw std::invalid_argument("cyclotomic: dense vector length must equal the conductor");
  }
  to_zumbroich(n, dense);
  bool descended = true;
  while (descended && n > 1) {
    descended = false;
    for (const auto& pp : factorize(n)) {
      if (try_descend(n, pp, dense)) {
        n /= pp.p;
        descended = true;
        break;
      }
    }
  }
  Cyclotomic out;
  out.conductor_ = n;
  for (long k = 0; k < n; ++k) {
    if (dense[k] != 0) out.terms_.emplace_back(k, std::move(dense[k]));
  }
  if (out.terms_.empty()) out.conductor_ = 1;
  return out;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [k, c] : terms_) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    z += c.get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (std::gcd(mod(a, conductor_), conductor_) != 1 && conductor_ > 1) {
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  }
  std::vector<Rational> dense(conductor_);
  for (const auto& [k, c] : terms_) dense[mod(k * a, conductor_)] += c;
  return from_dense(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic: inverse of zero");
  if (is_rational()) return Cyclotomic(Rational(1) / terms_.front().second);
  // x * prod_{a != 1} sigma_a(x) is the field norm, a nonzero rational.
  Cyclotomic cofactor(1);
  for (long a = 2; a < conductor_; ++a) {
    if (std::gcd(a, conductor_) == 1) cofactor *= galois(a);
  }
  Rational norm = (*this * cofactor).to_rational();
  return cofactor * Cyclotomic(Rational(1) / norm);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return y;
  const long n = std::lcm(x.conductor_, y.conductor_);
  std::vector<Rational> dense(n);
  for (const auto& [k, c] : x.terms_) dense[k * (n / x.conductor_)] += c;
  for (const auto& [k, c] : y.terms_) dense[k * (n / y.conductor_)] += c;
  return Cyclotomic::from_dense(n, std::move(dense));
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_rational() || y.is_rational()) {
    const Cyclotomic& scalar = x.is_rational() ? x : y;
    Cyclotomic out = x.is_rational() ? y : x;
    const Rational& s = scalar.terms_.front().second;
    for (auto& term : out.terms_) term.second *= s;
    return out;
  }
  const long n = std::lcm(x.conductor_, y.conductor_);
  const long sx = n / x.conductor_;
  const long sy = n / y.conductor_;
  std::vector<Rational> dense(n);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) dense[(kx * sx + ky * sy) % n] += cx * cy;
  }
  return Cyclotomic::from_dense(n, std::move(dense));
}

bool operator<(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.conductor_ != y.conductor_) return x.conductor_ < y.conductor_;
  const std::size_t m = std::min(x.terms_.size(), y.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (x.terms_[i].first != y.terms_[i].first) return x.terms_[i].first < y.terms_[i].first;
    int c = cmp(x.terms_[i].second, y.terms_[i].second);
    if (c != 0) return c < 0;
  }
  return x.terms_.size() < y.terms_.size();
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::uint64_t integer_mod(const Integer& z, std::uint64_t p) {
  Integer r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

std::uint64_t Cyclotomic::reduce_mod(std::uint64_t p, std::uint64_t primitive_root) const {
  if ((p - 1) % static_cast<std::uint64_t>(conductor_) != 0) {
    throw std::invalid_argument("reduce_mod: conductor does not divide p - 1");
  }
  const std::uint64_t zeta = pow_mod(primitive_root, (p - 1) / conductor_, p);
  std::uint64_t acc = 0;
  for (const auto& [k, c] : terms_) {
    std::uint64_t den = integer_mod(c.get_den(), p);
    if (den == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
    std::uint64_t coeff = integer_mod(c.get_num(), p) * pow_mod(den, p - 2, p) % p;
    acc = (acc + coeff * pow_mod(zeta, static_cast<std::uint64_t>(k), p)) % p;
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      std::string atom = "z" + std::to_string(conductor_) + (k == 1 ? "" : "^" + std::to_string(k));
      if (c == 1) {
        term = atom;
      } else if (c == -1) {
        term = "-" + atom;
      } else {
        term = c.get_str() + "*" + atom;
      }
    }
    if (first) {
      out << term;
    } else if (term.front() == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
    first = false;
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Cyclotomic expression() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Cyclotomic acc = term();
    for (skip(); pos_ < s_.size(); skip()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Cyclotomic t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

 private:
  Cyclotomic term() {
    skip();
    bool negative = false;
    while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative ^= s_[pos_] == '-';
      ++pos_;
      skip();
    }
    Cyclotomic value;
    if (peek() == 'z') {
      value = atom();
    } else {
      Rational coeff = rational();
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        value = atom() * Cyclotomic(coeff);
      } else {
        value = Cyclotomic(coeff);
      }
    }
    return negative ? -value : value;
  }

  Cyclotomic atom() {
    if (peek() != 'z') fail("expected atom 'z<n>'");
    ++pos_;
    long n = integer();
    long k = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      k = integer();
    }
    if (n < 1) fail("conductor must be positive");
    return Cyclotomic::root(k, n);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected number");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cyclotomic parse error at " + std::to_string(pos_) + " in '" + s_ + "': " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) { return Parser(text).expression(); }

}  // namespace octgroups
