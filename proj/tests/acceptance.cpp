// Acceptance run: one line per criterion, "[PASS]" or "[FAIL]", with the
// computed evidence. Every comparison is exact (integers, rationals and
// cyclotomics); there are no floating-point tolerances. Named generators are
// used as printed; where a corrected generator changes the outcome, the detail
// line says so, but the verdict stays with the printed one.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "octgroups/catalog.hpp"
#include "octgroups/character.hpp"
#include "octgroups/golden.hpp"
#include "octgroups/octonion.hpp"
#include "octgroups/quaternion.hpp"

using namespace octgroups;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + note);
  }
  void info(const std::string& note) { notes.push_back("note: " + note); }
};

std::map<std::string, CharacterTable> g_tables;

const CharacterTable& table(const std::string& name) {
  auto it = g_tables.find(name);
  if (it == g_tables.end()) it = g_tables.emplace(name, character_table(*build_shared(name))).first;
  return it->second;
}

Group close_named(const std::vector<std::string>& names) {
  std::vector<SignedPerm> gens;
  for (const auto& n : names) gens.push_back(generator(n));
  return Group::close(gens);
}

std::multiset<std::size_t> class_sizes(const Group& G) {
  std::multiset<std::size_t> s;
  for (const auto& c : G.classes()) s.insert(c.size);
  return s;
}

std::string show(const std::multiset<std::size_t>& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto x : s) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  return out.str() + "}";
}

GoldenTable golden_for(const std::string& name) { return load_golden_table(default_golden_dir() / (roster_entry(name).golden_table + ".tab")); }

AlignmentResult align(const std::string& name) { return align_to_paper(table(name), golden_for(name), roster_entry(name).orders_variant); }

std::vector<Labeling> labelings(const std::string& name) {
  auto golden = golden_for(name);
  auto r = align_to_paper(table(name), golden, roster_entry(name).orders_variant);
  std::vector<Labeling> out;
  for (const auto& a : r.alignments) out.push_back(reference_labeling(a, golden));
  return out;
}

std::size_t matches(const std::vector<LineCheck>& checks) {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const LineCheck& c) { return c.matches; }));
}

bool same_elements(const Group& a, const Group& b) { return a.order() == b.order() && is_subgroup(a, b); }

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::string>, std::size_t>> cases = {
      {{"alpha", "beta"}, 21},
      {{"alpha", "beta", "N1"}, 168},
      {{"alpha", "gamma"}, 1344},
      {{"gamma", "theta"}, 192},
      {{"A", "B"}, 192},
      {{"alpha_t", "beta_t", "gamma_t"}, 168},
      {{"alpha_t", "beta_t", "gamma_t", "N1"}, 1344},
      {{"alpha_t", "beta_t", "delta"}, 168},
  };
  for (const auto& [names, expected] : cases) {
    std::string label = "<";
    for (std::size_t i = 0; i < names.size(); ++i) label += (i ? "," : "") + names[i];
    label += ">";
    auto n = close_named(names).order();
    o.require(n == expected, "|" + label + "| = " + std::to_string(n) + ", expected " + std::to_string(expected));
  }
  auto pairs = pair_group().size();
  o.require(pairs == 192, "|pair_group| = " + std::to_string(pairs) + ", expected 192");
  o.info("with the corrected A* = " + std::string(generator("A_star").to_string()) + ", |<A*,B>| = " + std::to_string(close_named({"A_star", "B"}).order()));
  o.info("with delta* = N6 gamma~, |<alpha~,beta~,delta*>| = " + std::to_string(close_named({"alpha_t", "beta_t", "delta_star"}).order()));
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto check = [&](const std::string& name, std::size_t count, std::optional<std::multiset<std::size_t>> sizes) {
    const auto& G = *build_shared(name);
    auto s = class_sizes(G);
    bool ok = G.classes().size() == count && (!sizes || s == *sizes);
    o.require(ok, name + ": " + std::to_string(G.classes().size()) + " classes, sizes " + show(s) + (sizes ? ", expected " + show(*sizes) : ""));
  };
  auto printed_sizes = [](const std::string& stem) {
    auto t = load_golden_table(default_golden_dir() / (stem + ".tab"));
    std::multiset<std::size_t> s;
    for (const auto& x : t.sizes) s.insert(static_cast<std::size_t>(x.printed));
    return s;
  };
  check("7:3", 5, std::nullopt);
  check("2^3:7:3", 8, std::multiset<std::size_t>{1, 7, 28, 28, 28, 28, 24, 24});
  check("2^3.PSL2(7)", 11, std::multiset<std::size_t>{1, 7, 84, 224, 42, 42, 224, 192, 192, 168, 168});
  check("2^3:PSL2(7)", 11, std::multiset<std::size_t>{1, 7, 84, 224, 42, 42, 224, 192, 192, 168, 168});
  check("4.S4:2", 14, printed_sizes("table5"));
  check("2^3:S4", 14, printed_sizes("table5"));
  check("2^3.S4", 13, std::nullopt);
  check("4:S4:2", 13, std::nullopt);
  check("2^3.S4-pairs", 13, std::nullopt);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::set<std::string> flagged_locations;
  for (const auto& e : roster()) {
    auto r = align(e.name);
    std::string detail = e.name + " vs " + e.golden_table + ": " + (r.ok() ? std::to_string(r.alignments.size()) + " alignment(s)" : "no alignment");
    for (const auto& f : r.flagged) {
      detail += "; flagged " + f.location + " printed " + f.printed + ", computed " + f.computed;
      flagged_locations.insert(e.golden_table + " " + f.location);
    }
    for (const auto& m : r.mismatches) detail += "; " + m;
    o.require(r.ok(), detail);
  }
  // Each annotated cell must surface as flagged with its computed value.
  std::size_t annotated = 0;
  for (const char* stem : {"table1", "table2", "table3", "table4", "table5", "table7"}) {
    auto t = load_golden_table(default_golden_dir() / (std::string(stem) + ".tab"));
    for (const auto& s : t.sizes) annotated += s.annotated;
    for (const auto& row : t.rows)
      for (const auto& c : row) annotated += c.annotated;
  }
  o.require(flagged_locations.size() == annotated,
            std::to_string(annotated) + " annotated cells, " + std::to_string(flagged_locations.size()) + " distinct flagged in the report");
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto golden = golden_for("2^3.PSL2(7)");
  auto rn = align("2^3.PSL2(7)");
  auto rs = align("2^3:PSL2(7)");
  bool identical = false;
  if (rn.ok() && rs.ok()) {
    const auto& Tn = table("2^3.PSL2(7)");
    const auto& Ts = table("2^3:PSL2(7)");
    const auto& an = rn.alignments.front();
    // Any alignment of the split table may be the one matching the non-split alignment.
    for (const auto& as : rs.alignments) {
      bool all = true;
      for (std::size_t r = 0; r < golden.labels.size() && all; ++r)
        for (std::size_t c = 0; c < golden.sizes.size() && all; ++c)
          all = Tn.irreps[an.irrep_map[r]].values[an.class_map[c]] == Ts.irreps[as.irrep_map[r]].values[as.class_map[c]];
      identical = identical || all;
    }
  }
  o.require(identical, std::string("character matrices ") + (identical ? "identical" : "differ") + " under alignment to Table IV");
  auto hn = build_shared("2^3.PSL2(7)")->order_histogram();
  auto hs = build_shared("2^3:PSL2(7)")->order_histogram();
  auto count8 = [](const std::map<std::size_t, std::size_t>& h) { return h.count(8) ? h.at(8) : 0; };
  o.require(count8(hn) == 336, "non-split group: " + std::to_string(count8(hn)) + " elements of order 8, expected 336");
  o.require(count8(hs) == 0, "split group: " + std::to_string(count8(hs)) + " elements of order 8, expected 0");
  o.require(hn != hs, "order histograms differ");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto N = diagonal_subgroup();
  auto none = [&](const Group& G, ComplementProfile p, const std::string& label) {
    auto H = find_complement(G, N, p);
    o.require(!H, label + ": " + (H ? "complement found" : "no complement"));
  };
  auto some = [&](const Group& G, ComplementProfile p, const std::string& label) {
    auto H = find_complement(G, N, p);
    o.require(H.has_value(), label + ": " + (H ? "complement of order " + std::to_string(H->order()) : "no complement"));
  };
  none(*build_shared("2^3.PSL2(7)"), ComplementProfile::psl27, "<alpha,gamma>");
  auto AB = close_named({"A", "B"});
  if (is_subgroup(AB, N) && is_normal(AB, N) && AB.order() / N.order() == 24) {
    none(AB, ComplementProfile::s4, "<A,B>");
  } else {
    o.require(false, "<A,B> with the printed A has order " + std::to_string(AB.order()) + "; <A,B>/2^3 has order " +
                         std::to_string(AB.order() / N.order()) + ", so <A,B> is not an extension of 2^3 by S4");
  }
  o.info(std::string("<A*,B>: ") + (find_complement(*build_shared("2^3.S4"), N, ComplementProfile::s4) ? "complement found" : "no complement"));
  some(*build_shared("2^3:PSL2(7)"), ComplementProfile::psl27, "<alpha~,beta~,gamma~,N1>");
  some(*build_shared("2^3:S4"), ComplementProfile::s4, "<A~,B~,N1>");
  some(*build_shared("4:S4:2"), ComplementProfile::s4, "<gamma~,theta~,N1>");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& split = *build_shared("2^3:PSL2(7)");
  auto P1 = close_named({"alpha_t", "beta_t", "gamma_t"});
  auto P2 = close_named({"alpha_t", "beta_t", "delta"});
  std::multiset<std::size_t> psl{1, 21, 56, 42, 24, 24};
  o.require(P1.order() == 168 && class_sizes(P1) == psl, "<alpha~,beta~,gamma~>: order " + std::to_string(P1.order()) + ", class sizes " + show(class_sizes(P1)));
  o.require(P2.order() == 168 && class_sizes(P2) == psl, "<alpha~,beta~,delta>: order " + std::to_string(P2.order()) + ", class sizes " + show(class_sizes(P2)));
  if (P1.order() == 168 && P2.order() == 168) {
    o.require(!are_conjugate_subgroups(split, P1, P2), "the two subgroups are not conjugate in the split group");
  } else {
    o.require(false, "conjugacy test needs two subgroups of order 168");
  }
  auto natural_decomposition = [](const std::string& roster_name) {
    const auto& G = *build_shared(roster_name);
    auto labs = labelings(roster_name);
    auto m = decompose(natural_character(G), table(roster_name));
    return labs.empty() ? format_decomposition(m, canonical_labeling(table(roster_name))) : format_decomposition(m, labs.front());
  };
  auto d1 = natural_decomposition("PSL2(7)");
  o.require(d1 == "1 + 6", "natural character of <alpha~,beta~,gamma~> = " + d1 + ", expected 1 + 6");
  if (P2.order() == 168) {
    auto T2 = character_table(P2);
    auto m = decompose(natural_character(P2), T2);
    long parts = 0;
    for (auto x : m) parts += x;
    o.require(parts == 1, "natural character of <alpha~,beta~,delta> has " + std::to_string(parts) + " irreducible constituent(s)");
  } else {
    auto T2 = character_table(P2);
    auto m = decompose(natural_character(P2), T2);
    long parts = 0;
    for (auto x : m) parts += x;
    o.require(false, "<alpha~,beta~,delta> is not PSL2(7); its natural character has " + std::to_string(parts) + " irreducible constituent(s) there");
  }
  auto gt = generator("gamma_t"), d = generator("delta"), n7 = generator("N7");
  o.require(gt * d == n7 && d * gt == n7, "gamma~ delta = delta gamma~ = N7");
  auto ds = generator("delta_star");
  const auto& P3 = *build_shared("PSL2(7)-second");
  o.info("with delta* = " + ds.to_string() + ": |<alpha~,beta~,delta*>| = " + std::to_string(P3.order()) + ", natural character = " +
         natural_decomposition("PSL2(7)-second") + ", conjugate to the first: " + (are_conjugate_subgroups(split, P1, P3) ? "yes" : "no") +
         ", gamma~ delta* = " + (gt * ds == generator("N6") ? "N6" : (gt * ds).to_string()));
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t bad_nonsplit = 0, bad_split = 0;
  for (const auto& g : build_shared("2^3.PSL2(7)")->elements()) bad_nonsplit += !is_algebra_automorphism(g);
  for (const auto& g : build_shared("2^3:PSL2(7)")->elements()) bad_split += !is_algebra_automorphism(g);
  o.require(bad_nonsplit == 0, "<alpha,gamma>: " + std::to_string(1344 - bad_nonsplit) + "/1344 elements are automorphisms");
  o.require(bad_split > 0, "<alpha~,beta~,gamma~,N1>: " + std::to_string(bad_split) + " elements are not automorphisms");
  o.require(!is_algebra_automorphism(generator("A_t")), std::string("A~ ") + (is_algebra_automorphism(generator("A_t")) ? "is" : "is not") + " an automorphism");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* name : {"2^3:7:3", "2^3.PSL2(7)", "2^3:PSL2(7)", "4.S4:2", "2^3:S4", "2^3.S4", "4:S4:2", "2^3.S4-pairs"}) {
    auto file = load_tensor_file(default_golden_dir() / ("tensor_" + roster_entry(name).golden_table + ".txt"));
    std::vector<LineCheck> best;
    for (const auto& lab : labelings(name)) {
      auto checks = check_tensor_file(file, table(name), lab);
      if (best.empty() || matches(checks) > matches(best)) best = std::move(checks);
    }
    std::size_t plain = 0, plain_ok = 0;
    std::string detail;
    for (const auto& c : best) {
      if (c.suspected_typo) {
        detail += "; flagged line " + std::to_string(c.line) + " '" + c.printed + "', computed '" + c.computed + "'";
        continue;
      }
      ++plain;
      if (c.matches) {
        ++plain_ok;
      } else {
        detail += "; line " + std::to_string(c.line) + " printed '" + c.printed + "', computed '" + c.computed + "'";
      }
    }
    if (!file.relabel.empty()) detail += "; list uses a relabeled set of degree-3 irreps";
    o.require(!best.empty() && plain_ok == plain,
              std::string(name) + ": " + std::to_string(plain_ok) + "/" + std::to_string(plain) + " unannotated lines reproduced" + detail);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"2^3.PSL2(7)", "2^3:7:3", "branch_table4_table2"},
      {"2^3:PSL2(7)", "PSL2(7)", "branch_table4_table3"},
      {"2^3:7:3", "7:3", "branch_table2_table1"},
      {"PSL2(7)", "7:3", "branch_table3_table1"},
  };
  for (const auto& [parent, sub, stem] : cases) {
    auto file = load_branch_file(default_golden_dir() / (stem + ".txt"));
    const auto& G = *build_shared(parent);
    const auto& H = *build_shared(sub);
    if (!is_subgroup(G, H)) {
      o.require(false, sub + " is not a subgroup of " + parent);
      continue;
    }
    auto b = branch(G, H, table(parent), table(sub));
    std::vector<LineCheck> best;
    for (const auto& lp : labelings(parent))
      for (const auto& ls : labelings(sub)) {
        auto checks = check_branch_file(file, b, lp, ls);
        if (best.empty() || matches(checks) > matches(best)) best = std::move(checks);
      }
    std::string detail;
    for (const auto& c : best)
      if (!c.matches) detail += "; printed '" + c.printed + "', computed '" + c.computed + "'";
    o.require(!best.empty() && matches(best) == best.size(),
              parent + " -> " + sub + ": " + std::to_string(matches(best)) + "/" + std::to_string(best.size()) + " lines" + detail);
  }
  auto labs = labelings("7:3");
  auto m = decompose(natural_character(*build_shared("7:3")), table("7:3"));
  bool found = false;
  std::string text;
  for (const auto& lab : labs) {
    text = format_decomposition(m, lab);
    found = found || text == "1 + 3_1 + 3_2";
  }
  o.require(found, "natural character of 7:3 = " + text + ", expected 1 + 3_1 + 3_2");
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto elems = binary_octahedral();
  std::map<Coset, std::size_t> per;
  for (const auto& e : elems) ++per[e.coset];
  bool eight = per.size() == 6 && std::all_of(per.begin(), per.end(), [](const auto& kv) { return kv.second == 8; });
  o.require(elems.size() == 48 && eight, std::to_string(elems.size()) + " elements, " + std::to_string(per.size()) + " cosets of 8");
  std::size_t agree = 0;
  for (auto s : kCosets)
    for (auto t : kCosets) {
      bool all = true;
      for (const auto& x : elems)
        for (const auto& y : elems)
          if (x.coset == s && y.coset == t) all = all && coset_of(x.value * y.value) == coset_product(s, t);
      agree += all;
    }
  o.require(agree == 36, std::to_string(agree) + "/36 coset products agree with Table VI");
  auto pairs = pair_group();
  std::vector<SignedPerm> images;
  for (const auto& g : pairs) images.push_back(pair_to_signed_perm7(g));
  std::size_t hom_fail = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b) hom_fail += pair_to_signed_perm7(compose(pairs[a], pairs[b])) != images[a] * images[b];
  auto P = Group::close(images);
  o.require(hom_fail == 0 && P.order() == 192 && std::set<SignedPerm>(images.begin(), images.end()).size() == 192,
            "homomorphism on all 192^2 products, image of order " + std::to_string(P.order()));
  auto r = align("2^3.S4-pairs");
  o.require(r.ok(), std::string("image character table ") + (r.ok() ? "aligns" : "does not align") + " with Table VII");

  auto identify = [&](const Group& S) -> std::optional<SignedPerm> {
    if (S.order() != P.order()) return std::nullopt;
    for (const auto& g : build_shared("2^3.PSL2(7)")->elements()) {
      bool ok = true;
      for (const auto& x : P.generators()) ok = ok && S.contains(conjugate(x, g));
      if (ok) return g;
    }
    return std::nullopt;
  };
  auto AB = close_named({"A", "B"});
  auto g = identify(AB);
  o.require(g.has_value(), g ? "g^-1 (pair image) g = <A,B> for g = " + g->to_string()
                             : "no identification: |<A,B>| = " + std::to_string(AB.order()) + " with the printed A, pair image has order 192");
  auto gs = identify(*build_shared("2^3.S4"));
  o.info(gs ? "with A*: g^-1 (pair image) g = <A*,B> for g = " + gs->to_string() : "with A*: no identification either");
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::mt19937 rng(20261018);
  std::size_t axiom_fail = 0;
  for (const auto& e : roster()) {
    const auto& G = *build_shared(e.name);
    std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
    for (std::size_t i = 0; i < G.order(); ++i) {
      axiom_fail += G.multiply(i, G.inverse(i)) != G.identity_index();
      axiom_fail += G.element(G.identity_index()) * G.element(i) != G.element(i);
    }
    for (int trial = 0; trial < 500; ++trial) {
      auto a = G.element(pick(rng)), b = G.element(pick(rng)), c = G.element(pick(rng));
      axiom_fail += (a * b) * c != a * (b * c);
      axiom_fail += !G.contains(a * b);
    }
  }
  o.require(axiom_fail == 0, "group axioms on all roster groups: " + std::to_string(axiom_fail) + " violations");

  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto random_octonion = [&] {
    std::array<Rational, 8> c;
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return Octonion(c);
  };
  std::size_t oct_fail = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_octonion(), y = random_octonion();
    oct_fail += (x * y).norm() != x.norm() * y.norm();
    oct_fail += (x * x) * y != x * (x * y);
    oct_fail += (y * x) * x != y * (x * x);
  }
  o.require(oct_fail == 0, "octonion norm multiplicativity and alternativity on 300 random rational pairs: " + std::to_string(oct_fail) + " violations");

  std::size_t orth_fail = 0, deg_fail = 0;
  for (const auto& e : roster()) {
    const auto& T = table(e.name);
    long sum = 0;
    for (const auto& chi : T.irreps) sum += chi.degree * chi.degree;
    deg_fail += static_cast<std::size_t>(sum) != T.group_order;
    for (std::size_t i = 0; i < T.irreps.size(); ++i)
      for (std::size_t j = 0; j < T.irreps.size(); ++j) orth_fail += inner_product(T.irreps[i], T.irreps[j], T) != Rational(i == j ? 1 : 0);
    for (std::size_t a = 0; a < T.classes.size(); ++a)
      for (std::size_t b = 0; b < T.classes.size(); ++b) {
        Cyclotomic s;
        for (const auto& chi : T.irreps) s += chi.values[a] * chi.values[b].conjugate();
        orth_fail += s != (a == b ? Cyclotomic(static_cast<long>(T.group_order / T.classes[a].size)) : Cyclotomic());
      }
  }
  o.require(orth_fail == 0, "row and column orthogonality on all roster tables: " + std::to_string(orth_fail) + " violations");
  o.require(deg_fail == 0, "sum of squared degrees equals |G| on all roster tables: " + std::to_string(deg_fail) + " violations");

  for (const char* name : {"2^3.PSL2(7)", "2^3:PSL2(7)"}) {
    const auto& T = table(name);
    std::size_t zeros_deg3 = 0, other = 0;
    for (const auto& chi : T.irreps) {
      int fs = frobenius_schur(chi, T);
      if (fs == 0 && chi.degree == 3) {
        ++zeros_deg3;
      } else if (fs != 1) {
        ++other;
      }
    }
    o.require(zeros_deg3 == 2 && other == 0, std::string(name) + ": indicator 0 on " + std::to_string(zeros_deg3) + " degree-3 irreps, " +
                                                 std::to_string(other) + " other irreps with indicator != +1");
  }

  std::size_t pairs = 0, dim_fail = 0;
  for (const auto& ge : roster())
    for (const auto& he : roster()) {
      if (ge.name == he.name) continue;
      const auto& G = *build_shared(ge.name);
      const auto& H = *build_shared(he.name);
      if (H.order() >= G.order() || !is_subgroup(G, H)) continue;
      ++pairs;
      auto b = branch(G, H, table(ge.name), table(he.name));
      for (std::size_t i = 0; i < b.size(); ++i) {
        long dim = 0;
        for (std::size_t k = 0; k < b[i].size(); ++k) dim += b[i][k] * table(he.name).irreps[k].degree;
        dim_fail += dim != table(ge.name).irreps[i].degree;
      }
    }
  o.require(pairs > 0 && dim_fail == 0, "branching dimension conserved over " + std::to_string(pairs) + " roster subgroup pairs: " +
                                            std::to_string(dim_fail) + " violations");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"group orders of the printed generator sets (exact)", criterion1},
      {"class counts and class-size multisets (exact)", criterion2},
      {"character tables align with Tables I, II, III, IV, V, VII; annotated cells flagged (exact)", criterion3},
      {"shared Table IV, distinct element-order histograms (exact)", criterion4},
      {"extension type by exhaustive complement search (exact)", criterion5},
      {"two PSL2(7) subgroups of the split group (exact)", criterion6},
      {"octonion automorphisms (exact)", criterion7},
      {"tensor-product lists reproduced, annotated lines flagged (exact)", criterion8},
      {"branching tables reproduced (exact)", criterion9},
      {"quaternion construction and identification with <A,B> (exact)", criterion10},
      {"property suites (exact)", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
