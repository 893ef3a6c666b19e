#include "octgroups/golden.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

namespace octgroups {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw GoldenFormatError(file, 0, "cannot open file");
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.emplace_back(n, t);
  }
  return out;
}

long parse_long(const std::filesystem::path& file, std::size_t line, const std::string& token) {
  static const std::regex kInt(R"(-?\d+)");
  if (!std::regex_match(token, kInt)) throw GoldenFormatError(file, line, "expected an integer, got '" + token + "'");
  return std::stol(token);
}

}  // namespace

std::filesystem::path default_golden_dir() { return std::filesystem::path(OCTGROUPS_DEFAULT_DATA_DIR) / "golden"; }

std::size_t GoldenTable::label_index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("table " + id + " has no irrep labelled " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

Cyclotomic parse_golden_value(const std::string& token) {
  bool negative = !token.empty() && token[0] == '-';
  std::string body = negative ? token.substr(1) : token;
  Cyclotomic v;
  if (body == "mu") {
    v = cyc::mu();
  } else if (body == "mu_bar") {
    v = cyc::mu().conjugate();
  } else if (body == "eta") {
    v = cyc::eta();
  } else if (body == "eta_bar") {
    v = cyc::eta().conjugate();
  } else {
    return Cyclotomic::parse(token);
  }
  return negative ? -v : v;
}

GoldenTable load_golden_table(const std::filesystem::path& file) {
  static const std::regex kOrders(R"(orders\[([A-Za-z0-9_]+)\])");
  GoldenTable t;
  std::vector<std::size_t> row_lines;
  t.file = file;
  for (const auto& [n, line] : read_lines(file)) {
    auto tokens = split_ws(line);
    const std::string& key = tokens.front();
    std::smatch m;
    if (key == "table") {
      if (tokens.size() != 2) throw GoldenFormatError(file, n, "expected 'table <id>'");
      t.id = tokens[1];
    } else if (key == "sizes") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        GoldenSize s;
        auto bang = tokens[i].find('!');
        if (bang == std::string::npos) {
          s.printed = s.value = parse_long(file, n, tokens[i]);
        } else {
          s.printed = parse_long(file, n, tokens[i].substr(0, bang));
          s.value = parse_long(file, n, tokens[i].substr(bang + 1));
          s.annotated = true;
        }
        t.sizes.push_back(s);
      }
    } else if (std::regex_match(key, m, kOrders)) {
      std::vector<long> orders;
      for (std::size_t i = 1; i < tokens.size(); ++i) orders.push_back(parse_long(file, n, tokens[i]));
      t.orders[m[1].str()] = std::move(orders);
    } else if (key == "row") {
      if (tokens.size() < 4 || tokens[2] != ":") throw GoldenFormatError(file, n, "expected 'row <label> : values'");
      std::vector<GoldenCell> row;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        GoldenCell cell;
        auto bang = tokens[i].find('!');
        try {
          if (bang == std::string::npos) {
            cell.printed_text = tokens[i];
            cell.printed = cell.value = parse_golden_value(tokens[i]);
          } else {
            cell.printed_text = tokens[i].substr(0, bang);
            cell.printed = parse_golden_value(cell.printed_text);
            cell.value = parse_golden_value(tokens[i].substr(bang + 1));
            cell.annotated = true;
          }
        } catch (const std::invalid_argument& e) {
          throw GoldenFormatError(file, n, std::string("bad value: ") + e.what());
        }
        row.push_back(std::move(cell));
      }
      t.labels.push_back(tokens[1]);
      t.rows.push_back(std::move(row));
      row_lines.push_back(n);
    } else {
      throw GoldenFormatError(file, n, "unknown directive '" + key + "'");
    }
  }
  if (t.id.empty()) throw GoldenFormatError(file, 0, "missing 'table' line");
  if (t.sizes.empty()) throw GoldenFormatError(file, 0, "missing 'sizes' line");
  if (t.orders.empty()) throw GoldenFormatError(file, 0, "missing 'orders[...]' line");
  for (const auto& [variant, orders] : t.orders) {
    if (orders.size() != t.sizes.size()) throw GoldenFormatError(file, 0, "orders[" + variant + "] has the wrong length");
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].size() != t.sizes.size()) throw GoldenFormatError(file, row_lines[r], "row " + t.labels[r] + " has the wrong length");
  }
  if (t.rows.size() != t.sizes.size()) throw GoldenFormatError(file, 0, "table is not square");
  return t;
}

std::map<std::string, long> parse_terms(const std::string& text) {
  static const std::regex kTerm(R"(\s*(?:(\d+)\(([A-Za-z0-9_]+)\)|([A-Za-z0-9_]+))\s*)");
  std::map<std::string, long> out;
  std::stringstream in(text);
  for (std::string piece; std::getline(in, piece, '+');) {
    std::smatch m;
    if (!std::regex_match(piece, m, kTerm)) throw std::invalid_argument("cannot read term '" + piece + "'");
    if (m[1].matched) {
      out[m[2].str()] += std::stol(m[1].str());
    } else {
      out[m[3].str()] += 1;
    }
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<std::string, long>>& terms) {
  std::string out;
  for (const auto& [label, k] : terms) {
    if (k == 0) continue;
    if (!out.empty()) out += " + ";
    out += k == 1 ? label : std::to_string(k) + "(" + label + ")";
  }
  return out.empty() ? "0" : out;
}

TensorFile load_tensor_file(const std::filesystem::path& file) {
  static const std::regex kLine(R"(([A-Za-z0-9_]+)\s+x\s+([A-Za-z0-9_]+)\s*=\s*(.*?)(\s+!)?)");
  TensorFile t;
  t.file = file;
  for (const auto& [n, line] : read_lines(file)) {
    auto tokens = split_ws(line);
    if (tokens.front() == "table") {
      if (tokens.size() != 2) throw GoldenFormatError(file, n, "expected 'table <id>'");
      t.table_id = tokens[1];
      continue;
    }
    if (tokens.front() == "relabel") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size()) {
          throw GoldenFormatError(file, n, "expected 'relabel from=to ...'");
        }
        t.relabel[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
      }
      continue;
    }
    std::smatch m;
    if (!std::regex_match(line, m, kLine)) throw GoldenFormatError(file, n, "expected 'a x b = terms'");
    TensorLine tl;
    tl.line = n;
    tl.text = line;
    tl.left = m[1].str();
    tl.right = m[2].str();
    tl.suspected_typo = m[4].matched;
    try {
      tl.terms = parse_terms(m[3].str());
    } catch (const std::invalid_argument& e) {
      throw GoldenFormatError(file, n, e.what());
    }
    t.lines.push_back(std::move(tl));
  }
  if (t.table_id.empty()) throw GoldenFormatError(file, 0, "missing 'table' line");
  std::set<std::string> from, to;
  for (const auto& [a, b] : t.relabel) {
    from.insert(a);
    to.insert(b);
  }
  if (from != to) throw GoldenFormatError(file, 0, "relabel is not a permutation of labels");
  return t;
}

BranchFile load_branch_file(const std::filesystem::path& file) {
  static const std::regex kHeader(R"(table\s+(\S+)\s*->\s*(\S+))");
  static const std::regex kLine(R"(([A-Za-z0-9_]+)\s*->\s*(.*))");
  BranchFile b;
  b.file = file;
  for (const auto& [n, line] : read_lines(file)) {
    std::smatch m;
    if (std::regex_match(line, m, kHeader)) {
      b.parent_table = m[1].str();
      b.sub_table = m[2].str();
      continue;
    }
    if (!std::regex_match(line, m, kLine)) throw GoldenFormatError(file, n, "expected 'label -> terms'");
    BranchLine bl;
    bl.line = n;
    bl.text = line;
    bl.parent = m[1].str();
    try {
      bl.terms = parse_terms(m[2].str());
    } catch (const std::invalid_argument& e) {
      throw GoldenFormatError(file, n, e.what());
    }
    b.lines.push_back(std::move(bl));
  }
  if (b.parent_table.empty()) throw GoldenFormatError(file, 0, "missing 'table <parent> -> <sub>' line");
  return b;
}

std::vector<std::string> Alignment::labels(const GoldenTable& golden) const {
  std::vector<std::string> out(irrep_map.size());
  for (std::size_t r = 0; r < irrep_map.size(); ++r) out[irrep_map[r]] = golden.labels[r];
  return out;
}

AlignmentResult align_to_paper(const CharacterTable& T, const GoldenTable& golden, const std::string& orders_variant,
                               std::size_t max_class_maps) {
  AlignmentResult result;
  const std::size_t r = T.classes.size();
  auto variant = golden.orders.find(orders_variant);
  if (variant == golden.orders.end()) {
    result.mismatches.push_back("table " + golden.id + " has no orders[" + orders_variant + "] line");
    return result;
  }
  const auto& orders = variant->second;
  if (golden.sizes.size() != r || golden.rows.size() != T.irreps.size()) {
    result.mismatches.push_back("table " + golden.id + " has " + std::to_string(golden.sizes.size()) +
                                " classes, computed " + std::to_string(r));
    return result;
  }

  // Intern every value string so rows compare as integer vectors.
  std::map<std::string, int> ids;
  auto intern = [&](const Cyclotomic& v) { return ids.emplace(v.to_string(), static_cast<int>(ids.size())).first->second; };
  std::vector<std::vector<int>> gold(r, std::vector<int>(r)), comp(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      gold[i][c] = intern(golden.rows[i][c].value);
      comp[i][c] = intern(T.irreps[i].values[c]);
    }
  }

  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t k = 0; k < r; ++k) {
      if (static_cast<long>(T.classes[k].size) == golden.sizes[c].value &&
          static_cast<long>(T.classes[k].element_order) == orders[c]) {
        candidates[c].push_back(k);
      }
    }
    if (candidates[c].empty()) {
      result.mismatches.push_back("column " + std::to_string(c + 1) + " (size " + std::to_string(golden.sizes[c].value) +
                                  ", order " + std::to_string(orders[c]) + ") matches no computed class");
    }
  }
  if (!result.mismatches.empty()) return result;

  std::vector<std::size_t> column_order(r);
  for (std::size_t c = 0; c < r; ++c) column_order[c] = c;
  std::stable_sort(column_order.begin(), column_order.end(),
                   [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });

  std::vector<std::size_t> class_map(r, 0);
  std::vector<bool> used(r, false);
  std::size_t explored = 0;
  std::set<std::vector<std::size_t>> seen_irrep_maps;

  auto consistent = [&](std::size_t depth) {
    std::vector<std::vector<int>> a(r), b(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t d = 0; d < depth; ++d) {
        std::size_t c = column_order[d];
        a[i].push_back(gold[i][c]);
        b[i].push_back(comp[i][class_map[c]]);
      }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };

  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (explored >= max_class_maps) return;
    if (depth == r) {
      ++explored;
      std::vector<std::size_t> irrep_map(r);
      std::vector<bool> taken(r, false);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (taken[j]) continue;
          bool same = true;
          for (std::size_t c = 0; c < r && same; ++c) same = gold[i][c] == comp[j][class_map[c]];
          if (same) {
            irrep_map[i] = j;
            taken[j] = true;
            break;
          }
        }
      }
      if (seen_irrep_maps.insert(irrep_map).second) result.alignments.push_back({class_map, irrep_map});
      return;
    }
    std::size_t c = column_order[depth];
    for (std::size_t k : candidates[c]) {
      if (used[k]) continue;
      used[k] = true;
      class_map[c] = k;
      if (consistent(depth + 1)) search(depth + 1);
      used[k] = false;
    }
  };
  search(0);

  if (result.alignments.empty()) {
    // Report golden rows whose (size, order, value) multiset has no computed counterpart.
    for (std::size_t i = 0; i < r; ++i) {
      std::multiset<std::tuple<long, long, int>> g;
      for (std::size_t c = 0; c < r; ++c) g.emplace(golden.sizes[c].value, orders[c], gold[i][c]);
      bool found = false;
      for (std::size_t j = 0; j < r && !found; ++j) {
        std::multiset<std::tuple<long, long, int>> h;
        for (std::size_t k = 0; k < r; ++k) {
          h.emplace(static_cast<long>(T.classes[k].size), static_cast<long>(T.classes[k].element_order), comp[j][k]);
        }
        found = g == h;
      }
      if (!found) result.mismatches.push_back("row " + golden.labels[i] + " matches no computed character");
    }
    if (result.mismatches.empty()) result.mismatches.push_back("rows match individually but no class bijection fits all rows");
    return result;
  }

  const Alignment& first = result.alignments.front();
  for (std::size_t c = 0; c < r; ++c) {
    if (golden.sizes[c].annotated) {
      result.flagged.push_back({"size of column C" + std::to_string(c + 1), std::to_string(golden.sizes[c].printed),
                                std::to_string(golden.sizes[c].value), std::to_string(T.classes[first.class_map[c]].size)});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      const GoldenCell& cell = golden.rows[i][c];
      if (!cell.annotated) continue;
      result.flagged.push_back({"row " + golden.labels[i] + ", column C" + std::to_string(c + 1), cell.printed_text,
                                cell.value.to_string(), T.irreps[first.irrep_map[i]].values[first.class_map[c]].to_string()});
    }
  }
  return result;
}

}  // namespace octgroups

namespace octgroups {

std::size_t Labeling::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown irrep label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

Labeling canonical_labeling(const CharacterTable& T) {
  Labeling out;
  std::map<long, int> seen;
  for (std::size_t i = 0; i < T.irreps.size(); ++i) {
    long d = T.irreps[i].degree;
    out.labels.push_back("d" + std::to_string(d) + "_" + std::to_string(++seen[d]));
    out.order.push_back(i);
  }
  return out;
}

Labeling reference_labeling(const Alignment& alignment, const GoldenTable& golden) {
  Labeling out;
  out.labels = alignment.labels(golden);
  out.order = alignment.irrep_map;
  out.from_reference = true;
  return out;
}

std::string format_decomposition(const std::vector<long>& multiplicities, const Labeling& labeling) {
  std::vector<std::pair<std::string, long>> terms;
  for (std::size_t i : labeling.order) terms.emplace_back(labeling.labels[i], multiplicities[i]);
  return format_terms(terms);
}

std::map<std::string, long> labeled_terms(const std::vector<long>& multiplicities, const Labeling& labeling) {
  std::map<std::string, long> out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] != 0) out[labeling.labels[i]] = multiplicities[i];
  }
  return out;
}

std::vector<LineCheck> check_tensor_file(const TensorFile& file, const CharacterTable& T, const Labeling& table_labeling) {
  Labeling labeling = table_labeling;
  for (auto& l : labeling.labels) {
    auto it = file.relabel.find(l);
    if (it != file.relabel.end()) l = it->second;
  }
  std::vector<LineCheck> out;
  for (const auto& line : file.lines) {
    LineCheck c;
    c.line = line.line;
    c.printed = line.text;
    c.suspected_typo = line.suspected_typo;
    auto m = tensor_decompose(labeling.index_of(line.left), labeling.index_of(line.right), T);
    c.computed = line.left + " x " + line.right + " = " + format_decomposition(m, labeling);
    c.matches = labeled_terms(m, labeling) == line.terms;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LineCheck> check_branch_file(const BranchFile& file, const std::vector<std::vector<long>>& branching,
                                         const Labeling& parent, const Labeling& sub) {
  std::vector<LineCheck> out;
  for (const auto& line : file.lines) {
    LineCheck c;
    c.line = line.line;
    c.printed = line.text;
    const auto& m = branching[parent.index_of(line.parent)];
    c.computed = line.parent + " -> " + format_decomposition(m, sub);
    c.matches = labeled_terms(m, sub) == line.terms;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace octgroups
