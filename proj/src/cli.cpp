#include "octgroups/cli.hpp"

#include <algorithm>
#include <memory>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "octgroups/catalog.hpp"
#include "octgroups/character.hpp"
#include "octgroups/golden.hpp"
#include "octgroups/octonion.hpp"
#include "octgroups/verify.hpp"

namespace octgroups {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected text or json)");
}

namespace {

using json = nlohmann::ordered_json;

struct View {
  std::string name;
  std::shared_ptr<const Group> group;
  CharacterTable table;
  Labeling labeling;
  std::vector<std::size_t> class_order;
  std::string labels_from;
};

const RosterEntry& entry_or_usage(const std::string& name) {
  try {
    return roster_entry(name);
  } catch (const std::out_of_range&) {
    std::string known;
    for (const auto& e : roster()) known += (known.empty() ? "" : ", ") + e.name;
    throw UsageError("unknown group '" + name + "'; known groups: " + known);
  }
}

View make_view(const std::string& name, const CliOptions& options) {
  const auto& entry = entry_or_usage(name);
  View v;
  v.name = name;
  v.group = build_shared(name);
  v.table = character_table(*v.group);
  v.labeling = canonical_labeling(v.table);
  v.class_order.resize(v.table.classes.size());
  for (std::size_t i = 0; i < v.class_order.size(); ++i) v.class_order[i] = i;
  v.labels_from = "canonical";
  auto dir = options.golden_dir.empty() ? default_golden_dir() : options.golden_dir;
  try {
    auto golden = load_golden_table(dir / (entry.golden_table + ".tab"));
    auto r = align_to_paper(v.table, golden, entry.orders_variant);
    if (r.ok()) {
      v.labeling = reference_labeling(r.alignments.front(), golden);
      v.class_order = r.alignments.front().class_map;
      v.labels_from = entry.golden_table;
    }
  } catch (const GoldenFormatError&) {
    // Unreadable reference data: keep canonical labels.
  }
  return v;
}

std::size_t label_or_usage(const Labeling& labeling, const std::string& label) {
  try {
    return labeling.index_of(label);
  } catch (const std::out_of_range&) {
    std::string known;
    for (std::size_t i : labeling.order) known += (known.empty() ? "" : ", ") + labeling.labels[i];
    throw UsageError("unknown irrep label '" + label + "'; labels: " + known);
  }
}

json terms_json(const std::vector<long>& m, const Labeling& labeling) {
  json out = json::array();
  for (std::size_t i : labeling.order) {
    if (m[i] != 0) out.push_back({{"label", labeling.labels[i]}, {"multiplicity", m[i]}});
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width > s.size() ? width - s.size() : 0, ' '); }

}  // namespace

OutputDocument cmd_chartab(const std::string& group, const CliOptions& options) {
  View v = make_view(group, options);
  const auto& T = v.table;
  OutputDocument doc{options.format, "", 0};
  if (options.format == Format::json) {
    json out;
    out["group"] = v.name;
    out["order"] = T.group_order;
    out["exponent"] = v.group->exponent();
    out["prime"] = T.prime;
    out["labels_from"] = v.labels_from;
    json classes = json::array();
    for (std::size_t c = 0; c < v.class_order.size(); ++c) {
      const auto& k = T.classes[v.class_order[c]];
      classes.push_back({{"name", "C" + std::to_string(c + 1)},
                         {"representative", k.representative.to_string()},
                         {"size", k.size},
                         {"element_order", k.element_order}});
    }
    out["classes"] = std::move(classes);
    json irreps = json::array();
    for (std::size_t i : v.labeling.order) {
      json values = json::array();
      for (std::size_t c : v.class_order) values.push_back(T.irreps[i].values[c].to_string());
      irreps.push_back({{"label", v.labeling.labels[i]}, {"degree", T.irreps[i].degree}, {"values", std::move(values)}});
    }
    out["irreps"] = std::move(irreps);
    doc.payload = out.dump(2) + "\n";
    return doc;
  }

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{v.name}, sizes{"size"}, orders{"order"};
  for (std::size_t c = 0; c < v.class_order.size(); ++c) {
    head.push_back("C" + std::to_string(c + 1));
    sizes.push_back(std::to_string(T.classes[v.class_order[c]].size));
    orders.push_back(std::to_string(T.classes[v.class_order[c]].element_order));
  }
  grid.push_back(head);
  grid.push_back(sizes);
  grid.push_back(orders);
  for (std::size_t i : v.labeling.order) {
    std::vector<std::string> row{v.labeling.labels[i]};
    for (std::size_t c : v.class_order) row.push_back(T.irreps[i].values[c].to_string());
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << v.name << ": order " << T.group_order << ", " << T.classes.size() << " classes, labels from " << v.labels_from << "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) out << (c ? "  " : "") << pad(grid[r][c], width[c]);
    out << "\n";
  }
  out << "representatives:\n";
  for (std::size_t c = 0; c < v.class_order.size(); ++c) {
    out << "  C" << c + 1 << " " << T.classes[v.class_order[c]].representative.to_string() << "\n";
  }
  doc.payload = out.str();
  return doc;
}

OutputDocument cmd_tensor(const std::string& group, const std::string& left, const std::string& right, const CliOptions& options) {
  View v = make_view(group, options);
  auto i = label_or_usage(v.labeling, left);
  auto j = label_or_usage(v.labeling, right);
  auto m = tensor_decompose(i, j, v.table);
  auto text = format_decomposition(m, v.labeling);
  OutputDocument doc{options.format, "", 0};
  if (options.format == Format::json) {
    json out;
    out["group"] = v.name;
    out["left"] = left;
    out["right"] = right;
    out["decomposition"] = text;
    out["terms"] = terms_json(m, v.labeling);
    doc.payload = out.dump(2) + "\n";
  } else {
    doc.payload = left + " x " + right + " = " + text + "\n";
  }
  return doc;
}

OutputDocument cmd_branch(const std::string& group, const std::string& subgroup, const CliOptions& options) {
  View g = make_view(group, options);
  View h = make_view(subgroup, options);
  if (!is_subgroup(*g.group, *h.group)) throw UsageError(subgroup + " is not a subgroup of " + group);
  auto b = branch(*g.group, *h.group, g.table, h.table);
  OutputDocument doc{options.format, "", 0};
  if (options.format == Format::json) {
    json out;
    out["group"] = g.name;
    out["subgroup"] = h.name;
    json lines = json::array();
    for (std::size_t i : g.labeling.order) {
      lines.push_back({{"irrep", g.labeling.labels[i]},
                       {"restriction", format_decomposition(b[i], h.labeling)},
                       {"terms", terms_json(b[i], h.labeling)}});
    }
    out["lines"] = std::move(lines);
    doc.payload = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << g.name << " -> " << h.name << "\n";
    for (std::size_t i : g.labeling.order) out << g.labeling.labels[i] << " -> " << format_decomposition(b[i], h.labeling) << "\n";
    doc.payload = out.str();
  }
  return doc;
}

OutputDocument cmd_verify(const std::optional<std::string>& filter, const CliOptions& options) {
  VerifyOptions vo;
  vo.golden_dir = options.golden_dir;
  vo.filter = filter;
  VerificationReport report;
  try {
    report = verify_all(vo);
  } catch (const std::regex_error& e) {
    throw UsageError("bad --filter pattern: " + std::string(e.what()));
  }
  OutputDocument doc{options.format, "", report.ok() ? 0 : 1};
  doc.payload = options.format == Format::json ? report_json(report) + "\n" : report_text(report);
  return doc;
}

OutputDocument cmd_octmul(const std::vector<std::string>& factors, const CliOptions& options) {
  if (factors.empty()) throw UsageError("octmul needs at least one factor");
  std::vector<Octonion> xs;
  for (const auto& f : factors) {
    try {
      xs.push_back(Octonion::parse(f));
    } catch (const std::invalid_argument& e) {
      throw UsageError("cannot read octonion '" + f + "': " + e.what());
    }
  }
  Octonion p = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) p = p * xs[i];
  OutputDocument doc{options.format, "", 0};
  if (options.format == Format::json) {
    json out;
    json fs = json::array();
    for (const auto& x : xs) fs.push_back(x.to_string());
    out["factors"] = std::move(fs);
    out["product"] = p.to_string();
    doc.payload = out.dump(2) + "\n";
  } else {
    std::string lhs;
    for (const auto& x : xs) {
      std::string s = x.to_string();
      bool compound = s.find(' ') != std::string::npos;
      lhs += (lhs.empty() ? "" : " * ") + (compound && xs.size() > 1 ? "(" + s + ")" : s);
    }
    doc.payload = lhs + " = " + p.to_string() + "\n";
  }
  return doc;
}

}  // namespace octgroups
