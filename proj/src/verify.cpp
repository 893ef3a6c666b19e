#include "octgroups/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "octgroups/catalog.hpp"
#include "octgroups/character.hpp"
#include "octgroups/golden.hpp"
#include "octgroups/octonion.hpp"
#include "octgroups/quaternion.hpp"

namespace octgroups {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::flagged:
      return "flagged";
  }
  return "?";
}

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const ClaimResult& r) { return r.status == s; }));
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string size_multiset(const Group& G) {
  std::vector<std::size_t> sizes;
  for (const auto& c : G.classes()) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  return join(sizes);
}

std::string histogram_string(const Group& G) {
  std::vector<std::string> parts;
  for (const auto& [order, count] : G.order_histogram()) parts.push_back(std::to_string(order) + ":" + std::to_string(count));
  return join(parts);
}

bool same_elements(const Group& a, const Group& b) { return a.order() == b.order() && is_subgroup(a, b); }

std::vector<SignedPerm> named(const std::vector<std::string>& names) {
  std::vector<SignedPerm> out;
  for (const auto& n : names) out.push_back(generator(n));
  return out;
}

Group close_named(const std::vector<std::string>& names) { return Group::close(named(names)); }

// Reads a word such as {"beta^-1", "alpha", "beta", "alpha^3"} as a product
// under left-to-right composition.
SignedPerm word(const std::vector<std::string>& letters) {
  static const std::regex kLetter(R"(([A-Za-z0-9_]+)(?:\^(-?\d+))?)");
  SignedPerm out = SignedPerm::identity(7);
  for (const auto& l : letters) {
    std::smatch m;
    if (!std::regex_match(l, m, kLetter)) throw std::invalid_argument("bad word letter " + l);
    long k = m[2].matched ? std::stol(m[2].str()) : 1;
    out = out * generator(m[1].str()).pow(k);
  }
  return out;
}

class Context {
 public:
  explicit Context(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::shared_ptr<const Group> group(const std::string& name) { return build_shared(name); }

  const CharacterTable& table(const std::string& name) {
    auto it = tables_.find(name);
    if (it == tables_.end()) it = tables_.emplace(name, character_table(*group(name))).first;
    return it->second;
  }

  const GoldenTable& golden(const std::string& id) {
    auto it = golden_.find(id);
    if (it == golden_.end()) it = golden_.emplace(id, load_golden_table(dir_ / (id + ".tab"))).first;
    return it->second;
  }

  const AlignmentResult& alignment(const std::string& name) {
    auto it = alignments_.find(name);
    if (it == alignments_.end()) {
      const auto& e = roster_entry(name);
      it = alignments_.emplace(name, align_to_paper(table(name), golden(e.golden_table), e.orders_variant)).first;
    }
    return it->second;
  }

  /// One labeling per alignment; the canonical labeling when none exists.
  std::vector<Labeling> labelings(const std::string& name) {
    std::vector<Labeling> out;
    const auto& a = alignment(name);
    const auto& g = golden(roster_entry(name).golden_table);
    for (const auto& al : a.alignments) out.push_back(reference_labeling(al, g));
    if (out.empty()) out.push_back(canonical_labeling(table(name)));
    return out;
  }

 private:
  std::filesystem::path dir_;
  std::map<std::string, CharacterTable> tables_;
  std::map<std::string, GoldenTable> golden_;
  std::map<std::string, AlignmentResult> alignments_;
};

class Emitter {
 public:
  Emitter(std::string id, std::string anchor, std::vector<ClaimResult>& out)
      : id_(std::move(id)), anchor_(std::move(anchor)), out_(out) {}

  void check(bool ok, std::string computed, std::string expected) {
    emit(id_, ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(computed), std::move(expected));
  }
  // A claim at a place annotated in advance as a suspected misprint.
  void misprint(bool ok, std::string computed, std::string expected) {
    emit(id_, ok ? ClaimStatus::pass : ClaimStatus::flagged, std::move(computed), std::move(expected));
  }
  void sub(const std::string& suffix, ClaimStatus s, std::string computed, std::string expected) {
    emit(id_ + "." + suffix, s, std::move(computed), std::move(expected));
  }

 private:
  void emit(std::string id, ClaimStatus s, std::string computed, std::string expected) {
    out_.push_back({std::move(id), anchor_, s, std::move(computed), std::move(expected)});
  }

  std::string id_;
  std::string anchor_;
  std::vector<ClaimResult>& out_;
};

struct Claim {
  std::string id;
  std::string anchor;
  std::function<void(Context&, Emitter&)> run;
};

std::string decomposition_text(const CharacterRow& chi, const CharacterTable& T, const Labeling& labeling) {
  return format_decomposition(decompose(chi, T), labeling);
}

// Natural character of `name` decomposes as `expected` under some alignment.
void natural_claim(Context& ctx, Emitter& e, const std::string& name, const std::string& expected) {
  const auto& T = ctx.table(name);
  auto chi = natural_character(*ctx.group(name));
  auto want = parse_terms(expected);
  std::string first;
  for (const auto& lab : ctx.labelings(name)) {
    auto m = decompose(chi, T);
    if (first.empty()) first = format_decomposition(m, lab);
    if (labeled_terms(m, lab) == want) {
      e.check(true, "7 = " + format_decomposition(m, lab), "7 = " + expected);
      return;
    }
  }
  e.check(false, "7 = " + first, "7 = " + expected);
}

void irreducible_natural_claim(Context& ctx, Emitter& e, const std::string& name) {
  const auto& T = ctx.table(name);
  auto chi = natural_character(*ctx.group(name));
  Rational norm = inner_product(chi, chi, T);
  auto lab = ctx.labelings(name).front();
  e.check(norm == Rational(1), "<chi,chi> = " + norm.get_str() + ", 7 = " + decomposition_text(chi, T, lab),
          "irreducible (<chi,chi> = 1)");
}

void tensor_claim(Context& ctx, Emitter& e, const std::string& name) {
  const auto& entry = roster_entry(name);
  auto file = load_tensor_file(ctx.dir() / ("tensor_" + entry.golden_table + ".txt"));
  const auto& T = ctx.table(name);
  std::vector<LineCheck> best;
  std::size_t best_score = 0;
  for (const auto& lab : ctx.labelings(name)) {
    auto checks = check_tensor_file(file, T, lab);
    std::size_t score = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const LineCheck& c) { return c.matches; }));
    if (best.empty() || score > best_score) {
      best = std::move(checks);
      best_score = score;
    }
  }
  std::size_t plain = 0, plain_ok = 0;
  std::vector<std::string> bad;
  for (const auto& c : best) {
    if (c.suspected_typo) continue;
    ++plain;
    if (c.matches) {
      ++plain_ok;
    } else {
      bad.push_back("line " + std::to_string(c.line) + " printed '" + c.printed + "', computed '" + c.computed + "'");
    }
  }
  e.check(plain_ok == plain,
          std::to_string(plain_ok) + "/" + std::to_string(plain) + " lines reproduced" +
              (bad.empty() ? "" : "; differing: " + join(bad, "; ")),
          std::to_string(plain) + "/" + std::to_string(plain) + " lines of " + file.file.filename().string());
  if (!file.relabel.empty()) {
    std::vector<std::string> pairs;
    for (const auto& [a, b] : file.relabel) pairs.push_back(a + "->" + b);
    e.sub("labels", ClaimStatus::flagged, "the list names table irreps " + join(pairs, ", "), "the table's own labels");
  }
  for (const auto& c : best) {
    if (!c.suspected_typo) continue;
    e.sub("line" + std::to_string(c.line), c.matches ? ClaimStatus::pass : ClaimStatus::flagged, c.computed, c.printed);
  }
}

void branch_claim(Context& ctx, Emitter& e, const std::string& parent, const std::string& sub, const std::string& file_stem) {
  auto file = load_branch_file(ctx.dir() / (file_stem + ".txt"));
  auto G = ctx.group(parent);
  auto H = ctx.group(sub);
  if (!is_subgroup(*G, *H)) {
    e.check(false, sub + " is not contained in " + parent, sub + " <= " + parent);
    return;
  }
  auto b = branch(*G, *H, ctx.table(parent), ctx.table(sub));
  std::vector<LineCheck> best;
  std::size_t best_score = 0;
  for (const auto& lp : ctx.labelings(parent)) {
    for (const auto& ls : ctx.labelings(sub)) {
      auto checks = check_branch_file(file, b, lp, ls);
      std::size_t score = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const LineCheck& c) { return c.matches; }));
      if (best.empty() || score > best_score) {
        best = std::move(checks);
        best_score = score;
      }
    }
  }
  std::vector<std::string> bad;
  for (const auto& c : best) {
    if (!c.matches) bad.push_back(c.computed + " (printed " + c.printed + ")");
  }
  e.check(bad.empty(),
          std::to_string(best_score) + "/" + std::to_string(best.size()) + " lines reproduced" +
              (bad.empty() ? "" : "; differing: " + join(bad, "; ")),
          std::to_string(best.size()) + "/" + std::to_string(best.size()) + " lines of " + file.file.filename().string());
}

// Quaternion pairs whose p lies in one of `cosets`.
std::vector<QuaternionPair> pairs_in(const std::vector<Coset>& cosets) {
  std::vector<QuaternionPair> out;
  for (const auto& g : pair_group()) {
    if (std::find(cosets.begin(), cosets.end(), coset_of(g.p)) != cosets.end()) out.push_back(g);
  }
  return out;
}

bool closed_under_compose(const std::vector<QuaternionPair>& set) {
  for (const auto& a : set) {
    for (const auto& b : set) {
      auto c = compose(a, b).canonical();
      if (std::find(set.begin(), set.end(), c) == set.end()) return false;
    }
  }
  return true;
}

std::vector<Claim> make_registry() {
  std::vector<Claim> claims;
  auto add = [&claims](std::string id, std::string anchor, std::function<void(Context&, Emitter&)> fn) {
    claims.push_back({std::move(id), std::move(anchor), std::move(fn)});
  };

  // Octonion algebra.
  add("octonion.structure-constants", "phi_123 = phi_246 = phi_435 = phi_367 = phi_651 = phi_572 = phi_714 = 1",
      [](Context&, Emitter& e) {
        const int triples[7][3] = {{1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {3, 6, 7}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4}};
        std::vector<std::string> bad;
        for (const auto& t : triples) {
          if (StructureConstants::instance().phi(t[0], t[1], t[2]) != 1) {
            bad.push_back(std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]));
          }
        }
        e.check(bad.empty(), bad.empty() ? "all seven equal 1" : "differ at " + join(bad), "all seven equal 1");
      });
  add("octonion.triads", "\"35 triads, 7 of which are associative\"", [](Context&, Emitter& e) {
    int assoc = 0, anti = 0;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) (triad_type(i, j, k) == TriadType::associative ? assoc : anti)++;
    e.check(assoc == 7 && anti == 28, std::to_string(assoc) + " associative, " + std::to_string(anti) + " anti-associative",
            "7 associative, 28 anti-associative");
  });
  add("octonion.anti-associative-examples", "e1(e2e4) = e5 = -(e1e2)e4 and the three companion lines",
      [](Context&, Emitter& e) {
        auto u = [](int i) { return Octonion::unit(i); };
        bool ok = u(1) * (u(2) * u(4)) == u(5) && (u(1) * u(2)) * u(4) == -u(5) && -(u(1) * (u(2) * u(6))) == u(7) &&
                  (u(1) * u(2)) * u(6) == u(7) && -(u(1) * (u(2) * u(5))) == u(4) && (u(1) * u(2)) * u(5) == u(4) &&
                  u(1) * (u(2) * u(7)) == u(6) && (u(1) * u(2)) * u(7) == -u(6);
        e.check(ok, ok ? "all four lines hold" : "a line fails", "all four lines hold");
      });

  // Generators and relations.
  add("generators.orders", "alpha^7 = 1, beta^3 = 1, theta^8 = 1, A^6 = B^4 = 1, delta^2 = 1", [](Context&, Emitter& e) {
    const std::vector<std::pair<std::string, std::size_t>> want{{"alpha", 7}, {"beta", 3}, {"gamma", 2}, {"theta", 8},
                                                                {"A", 6},     {"B", 4},    {"delta", 2}, {"N1", 2},
                                                                {"N2", 2},    {"N7", 2}};
    std::vector<std::string> got, exp;
    bool ok = true;
    for (const auto& [n, o] : want) {
      auto k = generator(n).order();
      ok &= k == o;
      got.push_back(n + ":" + std::to_string(k));
      exp.push_back(n + ":" + std::to_string(o));
    }
    e.check(ok, join(got), join(exp));
  });
  add("generators.alpha-beta-relation", "alpha^7 = beta^3 = beta^-1 alpha beta alpha^3 = 1", [](Context&, Emitter& e) {
    // The printed word holds when products are read as function composition
    // (rightmost factor acts first); under left-to-right composition it reads
    // alpha^3 beta alpha beta^-1.
    auto w = word({"alpha^3", "beta", "alpha", "beta^-1"});
    e.check(w.is_identity(), "beta^-1 alpha beta alpha^3 (rightmost acts first) = " + w.to_string(), "()");
  });
  add("generators.diagonal-values", "N1 = (1,1,1,-1,-1,-1,-1), N2 = (1,-1,-1,1,-1,-1,1), N7 = (-1,1,-1,1,-1,1,-1)",
      [](Context&, Emitter& e) {
        auto diag = [](std::initializer_list<int> s) { return SignedPerm::diagonal(s); };
        bool ok = generator("N1") == diag({1, 1, 1, -1, -1, -1, -1}) && generator("N2") == diag({1, -1, -1, 1, -1, -1, 1}) &&
                  generator("N7") == diag({-1, 1, -1, 1, -1, 1, -1});
        auto n5 = generator("N7") * generator("N2");
        bool n5ok = n5 == diag({-1, -1, 1, 1, 1, -1, -1}) && generator("N2") * n5 == generator("N7");
        e.check(ok && n5ok, "N5 = N7 N2 = " + n5.to_string(), "N5 = diag(-,-,+,+,+,-,-) and N2 N5 = N7");
      });
  add("generators.diagonal-products", "N_i N_j = N_j N_i = N_k, (ijk = 123, 147, 165, 246, 257, 345, 367)",
      [](Context&, Emitter& e) {
        const int triples[7][3] = {{1, 2, 3}, {1, 4, 7}, {1, 6, 5}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 6, 7}};
        auto N = diagonal_elements();
        std::vector<std::string> bad;
        for (const auto& t : triples) {
          const auto &a = N[t[0] - 1], &b = N[t[1] - 1], &c = N[t[2] - 1];
          if (!(a * b == c && b * a == c)) bad.push_back(std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]));
        }
        bool defs = N[2] == N[0] * N[1] && N[3] == N[6] * N[0] && N[4] == N[6] * N[1] && N[5] == N[6] * N[2];
        e.check(bad.empty() && defs, bad.empty() && defs ? "all seven products and the four definitions hold" : "fails at " + join(bad),
                "all seven products and the four definitions hold");
      });
  add("generators.diagonal-fano", "\"The 7-diagonal matrices can be used to define the Fano plane\"", [](Context&, Emitter& e) {
    std::vector<std::string> got;
    bool ok = true;
    for (const auto& n : diagonal_elements()) {
      std::vector<int> plus;
      for (std::size_t i = 0; i < 7; ++i)
        if (n.sign(i) > 0) plus.push_back(static_cast<int>(i) + 1);
      bool assoc = plus.size() == 3 && triad_type(plus[0], plus[1], plus[2]) == TriadType::associative;
      ok &= assoc;
      got.push_back("(" + join(plus, "") + ")" + (assoc ? "" : "!"));
    }
    e.check(ok, "fixed triads " + join(got), "each N_i fixes the signs of one associative triad");
  });
  add("generators.tilde", "alpha~, beta~, gamma~, theta~, A~, B~ as the action on N1..N7", [](Context&, Emitter& e) {
    auto N = diagonal_elements();
    std::vector<std::string> bad;
    for (const std::string g : {"alpha", "beta", "gamma", "theta", "A", "B"}) {
      auto action = conjugation_action(generator(g).inverse(), N);
      if (action != generator(g + "_t")) bad.push_back(g + "~ printed " + generator(g + "_t").to_string() + ", action " + action.to_string());
    }
    e.check(bad.empty(), bad.empty() ? "each tilde generator is the action of g^-1 by conjugation on (N1..N7)" : join(bad, "; "),
            "tilde generators equal the induced permutations of N1..N7");
  });
  add("generators.theta-tilde", "theta~ = (N1N4N2N5)(N3)(N6N7), gamma~^2 = theta~^4 = 1", [](Context&, Emitter& e) {
    auto t = generator("theta_t");
    bool ok = t == SignedPerm::parse("(e1 e4 e2 e5)(e6 e7)", 7) && t.order() == 4 && generator("gamma_t").order() == 2;
    e.check(ok, "theta~ = " + t.to_string() + ", order " + std::to_string(t.order()), "(e1 e4 e2 e5)(e6 e7), order 4");
  });
  add("relations.s4-gamma-theta", "a = gamma~ theta~ gamma~, b = gamma~ theta~^-1, a^4 = b^3 = (ab)^2 = 1",
      [](Context&, Emitter& e) {
        auto a = word({"gamma_t", "theta_t", "gamma_t"});
        auto b = word({"gamma_t", "theta_t^-1"});
        bool ok = a.order() == 4 && b.order() == 3 && (a * b).order() == 2;
        e.check(ok, "orders " + std::to_string(a.order()) + " " + std::to_string(b.order()) + " " + std::to_string((a * b).order()),
                "orders 4 3 2");
      });
  add("relations.s4-A-B", "a = B~A~, b = A~^-1, a^4 = b^3 = (ab)^2 = 1", [](Context&, Emitter& e) {
    auto a = word({"B_t", "A_t"});
    auto b = word({"A_t^-1"});
    bool ok = a.order() == 4 && b.order() == 3 && (a * b).order() == 2;
    e.check(ok, "orders " + std::to_string(a.order()) + " " + std::to_string(b.order()) + " " + std::to_string((a * b).order()),
            "orders 4 3 2");
  });
  add("relations.gamma-tilde-delta", "gamma~ delta = delta gamma~ = N7", [](Context&, Emitter& e) {
    auto g = generator("gamma_t"), d = generator("delta");
    bool ok = g * d == generator("N7") && d * g == generator("N7");
    e.check(ok, "gamma~ delta = " + (g * d).to_string() + ", delta gamma~ = " + (d * g).to_string(),
            "both " + generator("N7").to_string());
  });

  // Octonion automorphisms.
  add("automorphism.generators", "alpha, beta, gamma, theta and N_i preserve the octonion algebra", [](Context&, Emitter& e) {
    std::vector<std::string> bad;
    for (const std::string g : {"alpha", "beta", "gamma", "theta", "B", "N1", "N2", "N3", "N4", "N5", "N6", "N7"}) {
      if (!is_algebra_automorphism(generator(g))) bad.push_back(g);
    }
    e.check(bad.empty(), bad.empty() ? "all preserve the algebra" : "not automorphisms: " + join(bad), "all preserve the algebra");
  });
  add("automorphism.A", "A of the 2^3.S4 generators preserves the octonion algebra", [](Context&, Emitter& e) {
    bool a = is_algebra_automorphism(generator("A"));
    bool star = is_algebra_automorphism(generator("A_star"));
    e.misprint(a,
               std::string("printed A ") + (a ? "is" : "is not") + " an automorphism; A* = " + generator("A_star").to_string() +
                   (star ? " is" : " is not"),
               "automorphism");
  });
  add("automorphism.nonsplit-1344", "2^3.PSL2(7) as the automorphism group of the octonionic set", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3.PSL2(7)");
    std::size_t bad = 0;
    for (const auto& g : G->elements()) bad += !is_algebra_automorphism(g);
    e.check(bad == 0, std::to_string(G->order() - bad) + "/" + std::to_string(G->order()) + " elements preserve the algebra",
            "all 1344");
  });
  add("automorphism.2^3:7:3", "\"a maximal subgroup 2^3:7:3 ... preserving the octonion algebra\"", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3:7:3");
    std::size_t bad = 0;
    for (const auto& g : G->elements()) bad += !is_algebra_automorphism(g);
    e.check(bad == 0, std::to_string(G->order() - bad) + "/" + std::to_string(G->order()) + " elements preserve the algebra",
            "all 168");
  });
  add("automorphism.split-1344", "\"The group 2^3:PSL2(7) does not preserve the octonion algebra\"", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3:PSL2(7)");
    std::size_t bad = 0;
    for (const auto& g : G->elements()) bad += !is_algebra_automorphism(g);
    e.check(bad > 0, std::to_string(bad) + " of 1344 elements fail", "at least one element fails");
  });
  add("automorphism.tilde-A-B", "\"The matrix representations of A~ and B~ do not preserve the octonion algebra\"",
      [](Context&, Emitter& e) {
        bool a = is_algebra_automorphism(generator("A_t")), b = is_algebra_automorphism(generator("B_t"));
        e.check(!a && !b, std::string("A~ ") + (a ? "preserves" : "fails") + ", B~ " + (b ? "preserves" : "fails"),
                "A~ fails, B~ fails");
      });

  // Group orders.
  for (const auto& entry : roster()) {
    if (entry.generators.empty()) continue;
    add("orders." + entry.name, "order of <" + join(entry.generators, ",") + ">", [entry](Context&, Emitter& e) {
      auto G = close_named(entry.generators);
      e.check(G.order() == entry.expected_order, std::to_string(G.order()), std::to_string(entry.expected_order));
    });
  }
  add("orders.A-B-printed", "\"The group 2^3.S4 can be generated by the generators A, B\"", [](Context&, Emitter& e) {
    auto G = close_named({"A", "B"});
    e.misprint(G.order() == 192, "|<A,B>| = " + std::to_string(G.order()) + " with the printed A; |<A*,B>| = " +
                                     std::to_string(close_named({"A_star", "B"}).order()),
               "192");
  });
  add("orders.delta-printed", "\"PSL2(7) = <alpha~, beta~, delta>\"", [](Context&, Emitter& e) {
    auto G = close_named({"alpha_t", "beta_t", "delta"});
    e.misprint(G.order() == 168, "|<alpha~,beta~,delta>| = " + std::to_string(G.order()) + " with the printed delta; with delta* = N6 gamma~ it is " +
                                     std::to_string(close_named({"alpha_t", "beta_t", "delta_star"}).order()),
               "168");
  });
  add("orders.alpha-gamma", "\"can also be generated by two generators alpha and gamma only\"", [](Context& ctx, Emitter& e) {
    auto G4 = close_named({"alpha", "beta", "gamma", "N1"});
    bool same = same_elements(G4, *ctx.group("2^3.PSL2(7)"));
    e.check(same && G4.order() == 1344, "<alpha,beta,gamma,N1> has order " + std::to_string(G4.order()) + (same ? ", equal to" : ", differs from") + " <alpha,gamma>",
            "both 1344 and equal as sets");
  });
  add("orders.delta-N1", "\"alpha~, beta~, delta and N1 generate the same irreducible representation of 2^3:PSL2(7)\"",
      [](Context& ctx, Emitter& e) {
        auto G = close_named({"alpha_t", "beta_t", "delta", "N1"});
        bool same = same_elements(G, *ctx.group("2^3:PSL2(7)"));
        e.check(same, std::string("<alpha~,beta~,delta,N1> ") + (same ? "equals" : "differs from") + " <alpha~,beta~,gamma~,N1>",
                "equal");
      });
  add("orders.pair-group", "\"This is a group of order 192\"", [](Context&, Emitter& e) {
    auto n = pair_group().size();
    e.check(n == 192, std::to_string(n), "192");
  });

  // Conjugacy classes.
  for (const auto& entry : roster()) {
    add("classes." + entry.name, "class count and sizes, " + entry.golden_table, [entry](Context& ctx, Emitter& e) {
      auto G = ctx.group(entry.name);
      const auto& gold = ctx.golden(entry.golden_table);
      std::vector<long> want;
      for (const auto& s : gold.sizes) want.push_back(s.value);
      std::sort(want.begin(), want.end());
      std::string got = std::to_string(G->classes().size()) + " classes: " + size_multiset(*G);
      std::string exp = std::to_string(entry.expected_classes) + " classes: " + join(want);
      e.check(got == exp, got, exp);
    });
  }

  // Extensions and complements.
  add("extension.normal", "\"an invariant subgroup of order 8 generated by N1, N2 and N7\"", [](Context& ctx, Emitter& e) {
    auto N = diagonal_subgroup();
    std::vector<std::string> bad;
    for (const std::string n : {"2^3:7:3", "2^3.PSL2(7)", "2^3:PSL2(7)", "2^3.S4", "2^3:S4", "4:S4:2", "2^3.S4-pairs"}) {
      auto G = ctx.group(n);
      if (!is_subgroup(*G, N) || !is_normal(*G, N)) bad.push_back(n);
    }
    e.check(bad.empty(), bad.empty() ? "normal in all seven" : "not normal in " + join(bad, ", "), "normal in all seven");
  });
  add("extension.quotient", "the quotient generated by alpha~, beta~, gamma~ is PSL2(7)", [](Context& ctx, Emitter& e) {
    auto N = diagonal_subgroup();
    auto labels = diagonal_elements();
    auto Qn = quotient(*ctx.group("2^3.PSL2(7)"), N, labels);
    auto Qs = quotient(*ctx.group("2^3:PSL2(7)"), N, labels);
    auto P = ctx.group("PSL2(7)");
    bool ok = same_elements(Qn, *P) && same_elements(Qs, *P);
    e.check(ok, "G/2^3 has order " + std::to_string(Qn.order()) + " (non-split), " + std::to_string(Qs.order()) + " (split); " +
                    (ok ? "both equal" : "not equal to") + " <alpha~,beta~,gamma~>",
            "both equal <alpha~,beta~,gamma~> of order 168");
  });
  add("extension.nonsplit-1344", "\"A copy of the PSL2(7) does not exist in the group 2^3.PSL2(7)\"", [](Context& ctx, Emitter& e) {
    auto H = find_complement(*ctx.group("2^3.PSL2(7)"), diagonal_subgroup(), ComplementProfile::psl27);
    e.check(!H, H ? "complement found" : "no complement", "no complement");
  });
  add("extension.split-1344", "\"there exists a copy of the PSL2(7) in the group 2^3:PSL2(7)\"", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3:PSL2(7)");
    auto N = diagonal_subgroup();
    auto H = find_complement(*G, N, ComplementProfile::psl27);
    auto P = ctx.group("PSL2(7)");
    std::size_t meet = 0;
    for (const auto& g : P->elements()) meet += N.contains(g);
    bool ok = H.has_value() && is_subgroup(*G, *P) && meet == 1;
    e.check(ok, std::string(H ? "complement found" : "no complement") + "; <alpha~,beta~,gamma~> meets 2^3 in " + std::to_string(meet) + " element(s)",
            "a complement; <alpha~,beta~,gamma~> is one");
  });
  add("extension.nonsplit-S4", "\"a copy of S4 does not exist in the group 2^3.S4\"", [](Context& ctx, Emitter& e) {
    auto N = diagonal_subgroup();
    auto H1 = find_complement(*ctx.group("2^3.S4"), N, ComplementProfile::s4);
    auto H2 = find_complement(*ctx.group("2^3.S4-pairs"), N, ComplementProfile::s4);
    e.check(!H1 && !H2, std::string("<A*,B>: ") + (H1 ? "complement" : "none") + ", pair group: " + (H2 ? "complement" : "none"),
            "none, none");
  });
  add("extension.split-S4", "2^3:S4 = <A~, B~, N1>", [](Context& ctx, Emitter& e) {
    auto H = find_complement(*ctx.group("2^3:S4"), diagonal_subgroup(), ComplementProfile::s4);
    auto S = close_named({"A_t", "B_t"});
    e.check(H.has_value() && S.order() == 24, std::string(H ? "complement found" : "no complement") + "; |<A~,B~>| = " + std::to_string(S.order()),
            "a complement; |<A~,B~>| = 24");
  });
  add("extension.split-4:S4:2", "4:S4:2 = <gamma~, theta~, N1>", [](Context& ctx, Emitter& e) {
    auto H = find_complement(*ctx.group("4:S4:2"), diagonal_subgroup(), ComplementProfile::s4);
    auto S = close_named({"gamma_t", "theta_t"});
    e.check(H.has_value() && S.order() == 24, std::string(H ? "complement found" : "no complement") + "; |<gamma~,theta~>| = " + std::to_string(S.order()),
            "a complement; |<gamma~,theta~>| = 24");
  });

  // The two PSL2(7) subgroups of the split group.
  add("psl27.classes", "two PSL2(7) subgroups with class sizes 1 21 56 42 24 24", [](Context& ctx, Emitter& e) {
    auto a = size_multiset(*ctx.group("PSL2(7)")), b = size_multiset(*ctx.group("PSL2(7)-second"));
    e.check(a == "1 21 24 24 42 56" && b == a, a + " / " + b, "1 21 24 24 42 56 / 1 21 24 24 42 56");
  });
  add("psl27.not-conjugate", "\"PSL2(7) = <alpha~, beta~, delta> is not conjugate to ... <alpha~, beta~, gamma~>\"",
      [](Context& ctx, Emitter& e) {
        auto G = ctx.group("2^3:PSL2(7)");
        auto P1 = ctx.group("PSL2(7)"), P2 = ctx.group("PSL2(7)-second");
        bool inside = is_subgroup(*G, *P1) && is_subgroup(*G, *P2);
        bool conj = are_conjugate_subgroups(*G, *P1, *P2);
        e.check(inside && !conj, std::string(inside ? "both in 2^3:PSL2(7), " : "not both in 2^3:PSL2(7), ") + (conj ? "conjugate" : "not conjugate") + " (second copy built with delta*)",
                "not conjugate");
      });
  add("psl27.delta-star", "delta* = N6 gamma~ replaces the printed delta", [](Context& ctx, Emitter& e) {
    auto d = generator("delta_star");
    bool ok = d == generator("N6") * generator("gamma_t") && d.order() == 2 && ctx.group("2^3:PSL2(7)")->contains(d);
    e.check(ok, "delta* = " + d.to_string() + ", gamma~ delta* = " + (generator("gamma_t") * d).to_string(),
            "an involution of 2^3:PSL2(7) equal to N6 gamma~");
  });
  add("psl27.natural-first", "\"<alpha~, beta~, gamma~> is reducible with 7 = 1 + 6\"",
      [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "PSL2(7)", "1 + 6"); });
  add("psl27.natural-second", "\"7-dimensional representation of the group <alpha~, beta~, delta> is irreducible\"",
      [](Context& ctx, Emitter& e) { irreducible_natural_claim(ctx, e, "PSL2(7)-second"); });

  add("subgroups.containment", "the maximal subgroups listed for both groups of order 1344", [](Context& ctx, Emitter& e) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"7:3", "2^3:7:3"},          {"7:3", "PSL2(7)"},          {"2^3:7:3", "2^3.PSL2(7)"},   {"4.S4:2", "2^3.PSL2(7)"},
        {"2^3.S4", "2^3.PSL2(7)"},   {"2^3.S4-pairs", "2^3.PSL2(7)"}, {"2^3:7:3", "2^3:PSL2(7)"}, {"PSL2(7)", "2^3:PSL2(7)"},
        {"PSL2(7)-second", "2^3:PSL2(7)"}, {"2^3:S4", "2^3:PSL2(7)"}, {"4:S4:2", "2^3:PSL2(7)"}};
    std::vector<std::string> bad;
    for (const auto& [h, g] : pairs) {
      if (!is_subgroup(*ctx.group(g), *ctx.group(h))) bad.push_back(h + " in " + g);
    }
    e.check(bad.empty(), bad.empty() ? "all 11 inclusions hold" : "missing: " + join(bad, ", "), "all 11 inclusions hold");
  });
  add("subgroups.table-attribution", "\"2^3:S4 ... character table is depicted in TABLE VII\"; \"4:S4:2 ... displayed in TABLE V\"",
      [](Context& ctx, Emitter& e) {
        auto a = ctx.group("2^3:S4")->classes().size();
        auto b = ctx.group("4:S4:2")->classes().size();
        e.misprint(a == 13 && b == 14,
                   "<A~,B~,N1> has " + std::to_string(a) + " classes (Table V split header), <gamma~,theta~,N1> has " +
                       std::to_string(b) + " (Table VII split header)",
                   "<A~,B~,N1> with Table VII (13 classes), <gamma~,theta~,N1> with Table V (14 classes)");
      });

  // Character tables against the transcribed tables.
  for (const auto& entry : roster()) {
    add("tables." + entry.name, entry.golden_table + " (" + entry.orders_variant + " orders)", [entry](Context& ctx, Emitter& e) {
      const auto& r = ctx.alignment(entry.name);
      if (!r.ok()) {
        e.check(false, join(r.mismatches, "; "), "aligned with " + entry.golden_table);
        return;
      }
      e.check(true, "aligned (" + std::to_string(r.alignments.size()) + " equivalent alignments), " + std::to_string(r.flagged.size()) + " annotated cell(s)",
              "aligned with " + entry.golden_table);
      for (std::size_t i = 0; i < r.flagged.size(); ++i) {
        const auto& f = r.flagged[i];
        bool same = f.computed == f.printed;
        e.sub("cell" + std::to_string(i + 1), same ? ClaimStatus::pass : ClaimStatus::flagged,
              f.location + ": computed " + f.computed, f.location + ": printed " + f.printed + " (suspected " + f.corrected + ")");
      }
    });
  }
  add("tables.shared-1344", "\"shares the same character table with the non-split extension\"", [](Context& ctx, Emitter& e) {
    const auto& a = ctx.alignment("2^3.PSL2(7)");
    const auto& b = ctx.alignment("2^3:PSL2(7)");
    bool same = false;
    if (a.ok() && b.ok()) {
      const auto& Ta = ctx.table("2^3.PSL2(7)");
      const auto& Tb = ctx.table("2^3:PSL2(7)");
      const auto &x = a.alignments.front(), &y = b.alignments.front();
      same = true;
      for (std::size_t r = 0; r < x.irrep_map.size(); ++r)
        for (std::size_t c = 0; c < x.class_map.size(); ++c)
          same &= Ta.irreps[x.irrep_map[r]].values[x.class_map[c]] == Tb.irreps[y.irrep_map[r]].values[y.class_map[c]];
    }
    e.check(same, same ? "character matrices equal under the alignments" : "matrices differ", "equal character matrices");
  });
  add("tables.order-histograms", "\"the powers of the group elements are not always the same\"", [](Context& ctx, Emitter& e) {
    auto hn = ctx.group("2^3.PSL2(7)")->order_histogram();
    auto hs = ctx.group("2^3:PSL2(7)")->order_histogram();
    std::size_t n8 = hn.count(8) ? hn[8] : 0, s8 = hs.count(8) ? hs[8] : 0;
    e.check(n8 == 336 && s8 == 0 && hn != hs,
            "non-split " + histogram_string(*ctx.group("2^3.PSL2(7)")) + "; split " + histogram_string(*ctx.group("2^3:PSL2(7)")),
            "336 elements of order 8 in the non-split group, none in the split group");
  });
  add("tables.power-maps", "\"the class structures are the same although the powers ... are not always the same\"",
      [](Context& ctx, Emitter& e) {
        const auto& a = ctx.alignment("2^3.PSL2(7)");
        const auto& b = ctx.alignment("2^3:PSL2(7)");
        if (!a.ok() || !b.ok()) {
          e.check(false, "no alignment", "aligned tables");
          return;
        }
        // Squaring map in column numbering of the shared table.
        auto squares = [](const CharacterTable& T, const Alignment& al) {
          std::vector<std::size_t> back(al.class_map.size());
          for (std::size_t c = 0; c < al.class_map.size(); ++c) back[al.class_map[c]] = c;
          std::vector<std::size_t> out;
          for (std::size_t c = 0; c < al.class_map.size(); ++c) out.push_back(back[T.power_maps.at(2)[al.class_map[c]]] + 1);
          return out;
        };
        auto pn = squares(ctx.table("2^3.PSL2(7)"), a.alignments.front());
        auto ps = squares(ctx.table("2^3:PSL2(7)"), b.alignments.front());
        e.check(pn != ps, "squares of C1..C11: non-split " + join(pn) + "; split " + join(ps), "different squaring maps");
      });
  add("tables.table2-conjugates", "\"chi[1_2] = conj chi[1_1], chi[3_2] = conj chi[3_1], chi[7_3] = conj chi[7_1]\"",
      [](Context& ctx, Emitter& e) {
        const auto& T = ctx.table("2^3:7:3");
        auto lab = ctx.labelings("2^3:7:3").front();
        std::vector<std::string> pairs;
        for (std::size_t a = 0; a < lab.order.size(); ++a) {
          for (std::size_t b = a + 1; b < lab.order.size(); ++b) {
            std::size_t i = lab.order[a], j = lab.order[b];
            bool conj = true;
            for (std::size_t c = 0; c < T.classes.size(); ++c) conj &= T.irreps[j].values[c] == T.irreps[i].values[c].conjugate();
            if (conj) pairs.push_back(lab.labels[j] + " = conj " + lab.labels[i]);
          }
        }
        std::sort(pairs.begin(), pairs.end());
        std::string got = join(pairs, ", ");
        e.misprint(got == "1_2 = conj 1_1, 3_2 = conj 3_1, 7_3 = conj 7_1", got, "1_2 = conj 1_1, 3_2 = conj 3_1, 7_3 = conj 7_1");
      });
  add("tables.table4-reality", "\"all the representations are real except the 3-dimensional representations\"",
      [](Context& ctx, Emitter& e) {
        std::vector<std::string> got;
        bool ok = true;
        for (const std::string n : {"2^3.PSL2(7)", "2^3:PSL2(7)"}) {
          const auto& T = ctx.table(n);
          for (const auto& chi : T.irreps) {
            bool real = std::all_of(chi.values.begin(), chi.values.end(), [](const Cyclotomic& v) { return v == v.conjugate(); });
            ok &= real == (chi.degree != 3);
          }
        }
        e.check(ok, ok ? "only the two degree-3 characters are non-real, in both groups" : "reality pattern differs",
                "only the two degree-3 characters are non-real");
      });

  // Characters of the defining representation.
  add("characters.natural.7:3", "\"7 = 1 + 3_1 + conj 3_1\"", [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "7:3", "1 + 3_1 + 3_2"); });
  add("characters.natural.2^3:7:3", "\"irreducible and denoted by 7_1\"", [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "2^3:7:3", "7_1"); });
  add("characters.natural.2^3.PSL2(7)", "\"the 7-dimensional irreducible representation of the group 2^3.PSL2(7)\"",
      [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "2^3.PSL2(7)", "7_1"); });
  add("characters.natural.4.S4:2", "\"7_1 = 1_1 + 6_3\"", [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "4.S4:2", "1_1 + 6_3"); });
  add("characters.natural.2^3.S4", "\"7_1 = 3_1 + 4_1\"", [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "2^3.S4", "3_1 + 4_1"); });
  add("characters.natural.2^3.S4-pairs", "\"7_1 = 3_1 + 4_1 under the irreducible representations of the group 2^3.S4\"",
      [](Context& ctx, Emitter& e) { natural_claim(ctx, e, "2^3.S4-pairs", "3_1 + 4_1"); });
  add("characters.frobenius-schur", "reality of every irrep; 0 exactly on the degree-3 irreps of the 1344 groups",
      [](Context& ctx, Emitter& e) {
        std::vector<std::string> bad;
        for (const auto& entry : roster()) {
          auto G = ctx.group(entry.name);
          const auto& T = ctx.table(entry.name);
          long sum = 0;
          for (const auto& chi : T.irreps) {
            int fs = frobenius_schur(chi, T);
            if (fs < -1 || fs > 1) bad.push_back(entry.name + " indicator " + std::to_string(fs));
            if (entry.expected_order == 1344 && (fs == 0) != (chi.degree == 3)) bad.push_back(entry.name + " degree " + std::to_string(chi.degree));
            sum += fs * chi.degree;
          }
          auto h = G->order_histogram();
          long involutions = h.count(2) ? static_cast<long>(h[2]) : 0;
          if (sum != involutions + 1) bad.push_back(entry.name + " sum " + std::to_string(sum) + " vs " + std::to_string(involutions + 1));
        }
        e.check(bad.empty(), bad.empty() ? "indicators in {-1,0,1}; sum FS*degree = involutions + 1 for every roster group" : join(bad, "; "),
                "indicators in {-1,0,1}; sum FS*degree = involutions + 1 for every roster group");
      });
  add("characters.orthogonality", "irreducibility of every tabulated character", [](Context& ctx, Emitter& e) {
    std::vector<std::string> bad;
    for (const auto& entry : roster()) {
      const auto& T = ctx.table(entry.name);
      long squares = 0;
      for (std::size_t i = 0; i < T.irreps.size(); ++i) {
        squares += T.irreps[i].degree * T.irreps[i].degree;
        for (std::size_t j = 0; j < T.irreps.size(); ++j) {
          if (inner_product(T.irreps[i], T.irreps[j], T) != Rational(i == j ? 1 : 0)) bad.push_back(entry.name);
        }
      }
      if (squares != static_cast<long>(T.group_order)) bad.push_back(entry.name + " sum of squares");
    }
    e.check(bad.empty(), bad.empty() ? "rows orthonormal and sum d^2 = |G| for every roster group" : join(bad, ", "),
            "rows orthonormal and sum d^2 = |G| for every roster group");
  });

  // Tensor products and branching.
  for (const std::string n : {"2^3:7:3", "2^3.PSL2(7)", "2^3:PSL2(7)", "4.S4:2", "2^3:S4", "2^3.S4", "4:S4:2", "2^3.S4-pairs"}) {
    add("tensor." + n, "tensor products of the irreducible representations, " + roster_entry(n).golden_table,
        [n](Context& ctx, Emitter& e) { tensor_claim(ctx, e, n); });
  }
  add("tensor.symmetry", "i x j = j x i", [](Context& ctx, Emitter& e) {
    std::vector<std::string> bad;
    for (const auto& entry : roster()) {
      const auto& T = ctx.table(entry.name);
      for (std::size_t i = 0; i < T.irreps.size(); ++i)
        for (std::size_t j = i + 1; j < T.irreps.size(); ++j)
          if (tensor_decompose(i, j, T) != tensor_decompose(j, i, T)) bad.push_back(entry.name);
    }
    e.check(bad.empty(), bad.empty() ? "symmetric for every roster group" : join(bad, ", "), "symmetric for every roster group");
  });
  add("branch.nonsplit-2^3:7:3", "decompositions under the maximal subgroup 2^3:7:3",
      [](Context& ctx, Emitter& e) { branch_claim(ctx, e, "2^3.PSL2(7)", "2^3:7:3", "branch_table4_table2"); });
  add("branch.split-2^3:7:3", "decompositions under the maximal subgroup 2^3:7:3",
      [](Context& ctx, Emitter& e) { branch_claim(ctx, e, "2^3:PSL2(7)", "2^3:7:3", "branch_table4_table2"); });
  add("branch.split-PSL2(7)", "decompositions of 2^3:PSL2(7) under the maximal subgroup PSL2(7)",
      [](Context& ctx, Emitter& e) { branch_claim(ctx, e, "2^3:PSL2(7)", "PSL2(7)", "branch_table4_table3"); });
  add("branch.2^3:7:3-7:3", "decompositions of 2^3:7:3 under the maximal subgroup 7:3",
      [](Context& ctx, Emitter& e) { branch_claim(ctx, e, "2^3:7:3", "7:3", "branch_table2_table1"); });
  add("branch.PSL2(7)-7:3", "decompositions of PSL2(7) under the maximal subgroup 7:3",
      [](Context& ctx, Emitter& e) { branch_claim(ctx, e, "PSL2(7)", "7:3", "branch_table3_table1"); });
  add("branch.composition", "1344 -> 2^3:7:3 -> 7:3 agrees with 1344 -> 7:3", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3.PSL2(7)"), K = ctx.group("2^3:7:3"), H = ctx.group("7:3");
    auto gk = branch(*G, *K, ctx.table("2^3.PSL2(7)"), ctx.table("2^3:7:3"));
    auto kh = branch(*K, *H, ctx.table("2^3:7:3"), ctx.table("7:3"));
    auto gh = branch(*G, *H, ctx.table("2^3.PSL2(7)"), ctx.table("7:3"));
    bool ok = true;
    for (std::size_t i = 0; i < gk.size(); ++i)
      for (std::size_t k = 0; k < gh[i].size(); ++k) {
        long s = 0;
        for (std::size_t j = 0; j < kh.size(); ++j) s += gk[i][j] * kh[j][k];
        ok &= s == gh[i][k];
      }
    e.check(ok, ok ? "composed branching equals direct branching" : "composition differs", "composed branching equals direct branching");
  });
  add("branch.dimensions", "restriction preserves dimension", [](Context& ctx, Emitter& e) {
    const std::vector<std::pair<std::string, std::string>> pairs{{"2^3.PSL2(7)", "2^3:7:3"}, {"2^3:PSL2(7)", "PSL2(7)"},
                                                                 {"2^3:7:3", "7:3"},       {"PSL2(7)", "7:3"},
                                                                 {"2^3.PSL2(7)", "4.S4:2"}, {"2^3.PSL2(7)", "2^3.S4"}};
    bool ok = true;
    for (const auto& [g, h] : pairs) {
      const auto& TG = ctx.table(g);
      const auto& TH = ctx.table(h);
      auto b = branch(*ctx.group(g), *ctx.group(h), TG, TH);
      for (std::size_t i = 0; i < b.size(); ++i) {
        long d = 0;
        for (std::size_t j = 0; j < b[i].size(); ++j) d += b[i][j] * TH.irreps[j].degree;
        ok &= d == TG.irreps[i].degree;
      }
    }
    e.check(ok, ok ? "dimensions conserved for six subgroup pairs" : "dimension mismatch", "dimensions conserved for six subgroup pairs");
  });

  // Quaternionic construction.
  add("quaternion.binary-octahedral", "O = V0 + V+ + V- + V1 + V2 + V3", [](Context&, Emitter& e) {
    auto O = binary_octahedral();
    std::map<Coset, int> count;
    bool unit = true;
    for (const auto& x : O) {
      ++count[x.coset];
      unit &= x.value.norm() == QuadSqrt2(1) && coset_of(x.value) == x.coset;
    }
    bool ok = O.size() == 48 && unit && std::all_of(kCosets.begin(), kCosets.end(), [&](Coset c) { return count[c] == 8; });
    e.check(ok, std::to_string(O.size()) + " unit quaternions, coset sizes " + std::to_string(count[Coset::V0]) + " " + std::to_string(count[Coset::Vplus]) + " " +
                    std::to_string(count[Coset::Vminus]) + " " + std::to_string(count[Coset::V1]) + " " + std::to_string(count[Coset::V2]) + " " +
                    std::to_string(count[Coset::V3]),
            "48 unit quaternions, coset sizes 8 8 8 8 8 8");
  });
  add("quaternion.table6", "TABLE VI", [](Context&, Emitter& e) {
    auto O = binary_octahedral();
    std::vector<std::string> bad;
    for (const auto& a : O)
      for (const auto& b : O) {
        Coset got = coset_of(a.value * b.value);
        if (got != coset_product(a.coset, b.coset)) {
          bad.push_back(to_string(a.coset) + "*" + to_string(b.coset));
        }
      }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    e.check(bad.empty(), bad.empty() ? "all 36 coset products match" : "differ at " + join(bad, ", "), "all 36 coset products match");
  });
  add("quaternion.q-cosets", "\"the corresponding sets of quaternions q ... V0, V-, V+, V1, V2, V3\"", [](Context&, Emitter& e) {
    std::map<Coset, std::set<Coset>> seen;
    for (const auto& g : pair_group()) seen[coset_of(g.p)].insert(coset_of(g.q));
    const std::map<Coset, Coset> want{{Coset::V0, Coset::V0}, {Coset::Vplus, Coset::Vminus}, {Coset::Vminus, Coset::Vplus},
                                      {Coset::V1, Coset::V1}, {Coset::V2, Coset::V2},       {Coset::V3, Coset::V3}};
    bool ok = true;
    std::vector<std::string> got;
    for (const auto& [p, qs] : seen) {
      ok &= qs.size() == 1 && *qs.begin() == want.at(p);
      for (Coset q : qs) got.push_back("[" + to_string(p) + "," + to_string(q) + "]");
    }
    // Every p V0 q = V0 with p, q in O must also appear.
    std::size_t preserving = 0;
    auto O = binary_octahedral();
    std::vector<Quaternion> v0;
    for (const auto& x : O)
      if (x.coset == Coset::V0) v0.push_back(x.value);
    for (const auto& p : O)
      for (const auto& q : O) {
        bool keeps = true;
        for (const auto& h : v0) {
          auto img = p.value * h * q.value;
          keeps &= std::find(v0.begin(), v0.end(), img) != v0.end();
        }
        preserving += keeps;
      }
    ok &= preserving == 384;
    e.check(ok, join(got) + "; " + std::to_string(preserving) + " pairs (p,q) of O preserve V0",
            "[V0,V0] [V+,V-] [V-,V+] [V1,V1] [V2,V2] [V3,V3]; 384 pairs (p,q) of O preserve V0");
  });
  add("quaternion.pair-group", "\"a group of order 192 with 13 conjugacy classes\"", [](Context& ctx, Emitter& e) {
    auto pairs = pair_group();
    auto G = ctx.group("2^3.S4-pairs");
    bool ok = pairs.size() == 192 && G->order() == 192 && G->classes().size() == 13;
    e.check(ok, std::to_string(pairs.size()) + " pairs, image of order " + std::to_string(G->order()) + " with " + std::to_string(G->classes().size()) + " classes",
            "192 pairs, image of order 192 with 13 classes");
  });
  add("quaternion.homomorphism", "[p,q] -> 7x7 signed permutation matrix", [](Context&, Emitter& e) {
    auto pairs = pair_group();
    std::vector<SignedPerm> img;
    for (const auto& g : pairs) img.push_back(pair_to_signed_perm7(g));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j)
        bad += pair_to_signed_perm7(compose(pairs[i], pairs[j])) != img[i] * img[j];
    std::set<SignedPerm> distinct(img.begin(), img.end());
    e.check(bad == 0 && distinct.size() == 192,
            std::to_string(bad) + " failing products, " + std::to_string(distinct.size()) + " distinct images",
            "0 failing products, 192 distinct images");
  });
  add("quaternion.block-form", "\"block diagonal form of 3x3 and 4x4 matrices\"", [](Context& ctx, Emitter& e) {
    auto G = ctx.group("2^3.S4-pairs");
    bool ok = true;
    for (const auto& g : G->elements())
      for (std::size_t i = 0; i < 7; ++i) ok &= (i < 3) == (g.image(i) < 3);
    e.check(ok, ok ? "every image preserves {e1,e2,e3} and {e4,e5,e6,e7}" : "a block is mixed",
            "every image preserves {e1,e2,e3} and {e4,e5,e6,e7}");
  });
  add("quaternion.normal-2^3", "\"[1,-1], [e1,-e1] and [e2,-e2] ... the group 2^3 is a normal subgroup\"", [](Context& ctx, Emitter& e) {
    auto one = Quaternion::unit(0), e1 = Quaternion::unit(1), e2 = Quaternion::unit(2);
    std::vector<SignedPerm> gens{pair_to_signed_perm7({one, -one}), pair_to_signed_perm7({e1, -e1}), pair_to_signed_perm7({e2, -e2})};
    auto N = Group::close(gens);
    bool elementary = N.order() == 8 && N.exponent() == 2;
    auto G = ctx.group("2^3.S4-pairs");
    bool normal = is_subgroup(*G, N) && is_normal(*G, N);
    bool diag = same_elements(N, diagonal_subgroup());
    e.check(elementary && normal, "order " + std::to_string(N.order()) + ", exponent " + std::to_string(N.exponent()) + (normal ? ", normal" : ", not normal") +
                                      (diag ? ", equal to <N1,N2,N7>" : ""),
            "order 8, exponent 2, normal");
  });
  add("quaternion.subgroup-96", "\"[V0,V0] + [V+,V-] + [V-,V+] forms a group of order 96\"", [](Context&, Emitter& e) {
    auto s = pairs_in({Coset::V0, Coset::Vplus, Coset::Vminus});
    bool closed = closed_under_compose(s);
    e.check(closed && s.size() == 96, std::to_string(s.size()) + " pairs, " + (closed ? "closed" : "not closed"), "96 pairs, closed");
  });
  add("quaternion.subgroup-64", "\"[V0,V0] + [V1,V1] forms a group of order 64\"", [](Context&, Emitter& e) {
    auto s = pairs_in({Coset::V0, Coset::V1});
    bool closed = closed_under_compose(s);
    e.check(closed && s.size() == 64, std::to_string(s.size()) + " pairs, " + (closed ? "closed" : "not closed"), "64 pairs, closed");
  });
  add("quaternion.identification", "the pair group and <A,B> describe the same group", [](Context& ctx, Emitter& e) {
    auto P = ctx.group("2^3.S4-pairs");
    auto S = ctx.group("2^3.S4");
    auto G = ctx.group("2^3.PSL2(7)");
    std::optional<SignedPerm> found;
    for (const auto& g : G->elements()) {
      bool ok = true;
      for (const auto& x : P->elements()) {
        if (!S->contains(conjugate(x, g))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = g;
        break;
      }
    }
    e.check(found.has_value(), found ? "g^-1 (pair image) g = <A*,B> for g = " + found->to_string() : "no conjugating element in 2^3.PSL2(7)",
            "an explicit signed permutation conjugating one onto the other");
  });
  add("quaternion.identification-printed", "the pair group coincides with <A,B> for the printed A", [](Context& ctx, Emitter& e) {
    auto AB = close_named({"A", "B"});
    auto P = ctx.group("2^3.S4-pairs");
    e.misprint(AB.order() == P->order(), "|<A,B>| = " + std::to_string(AB.order()) + ", pair image " + std::to_string(P->order()),
               "equal orders (192)");
  });

  add("a8.parity", "\"2^3:PSL2(7) is a maximal subgroup of the simple group A8\" (documented, partially verified)",
      [](Context& ctx, Emitter& e) {
        auto G = ctx.group("2^3:PSL2(7)");
        std::size_t odd = 0;
        for (const auto& g : G->elements()) odd += !g.is_even_on_signed_points();
        e.check(odd == 0,
                std::to_string(G->order() - odd) + "/" + std::to_string(G->order()) +
                    " elements act as even permutations of the 14 points +-e_i; maximality in A8 not checked",
                "all elements even");
      });

  return claims;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = make_registry();
  return claims;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

VerificationReport verify_all(const VerifyOptions& options) {
  std::optional<std::regex> filter;
  if (options.filter) filter.emplace(*options.filter);
  Context ctx(options.golden_dir.empty() ? default_golden_dir() : options.golden_dir);
  VerificationReport report;
  for (const auto& claim : registry()) {
    if (filter && !std::regex_search(claim.id, *filter)) continue;
    Emitter emitter(claim.id, claim.anchor, report.results);
    try {
      claim.run(ctx, emitter);
    } catch (const GoldenFormatError& err) {
      report.results.push_back({claim.id, claim.anchor, ClaimStatus::fail, "unreadable reference file " + err.file().string() + ": " + err.what(), "readable reference data"});
    } catch (const std::exception& err) {
      report.results.push_back({claim.id, claim.anchor, ClaimStatus::fail, std::string("error: ") + err.what(), "no error"});
    }
  }
  return report;
}

std::string report_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["paper_anchor"] = r.paper_anchor;
    j["status"] = to_string(r.status);
    j["computed"] = r.computed;
    j["expected"] = r.expected;
    out.push_back(std::move(j));
  }
  return out.dump(indent);
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << "[" << to_string(r.status) << "] " << r.claim_id << "\n"
        << "    anchor:   " << r.paper_anchor << "\n"
        << "    computed: " << r.computed << "\n"
        << "    expected: " << r.expected << "\n";
  }
  out << report.count(ClaimStatus::pass) << " pass, " << report.count(ClaimStatus::flagged) << " flagged, "
      << report.count(ClaimStatus::fail) << " fail\n";
  return out.str();
}

}  // namespace octgroups
