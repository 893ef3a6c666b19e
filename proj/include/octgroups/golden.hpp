#pragma once

// Transcribed reference tables and their alignment with computed tables.
//
// Table files (*.tab):
//   table <id>
//   sizes <n> ...                  a typo cell is written printed!corrected
//   orders[<variant>] <n> ...      one line per group sharing the table
//   row <label> : <value> ...      integers, z-expressions without spaces, or
//                                  [-]mu, [-]mu_bar, [-]eta, [-]eta_bar
// Tensor files (tensor_*.txt): "table <id>" then lines "a x b = terms", where
// terms are "label" or "k(label)" joined by " + "; a trailing " !" marks a
// line suspected to be misprinted. An optional "relabel t=a ..." line records
// that the list names the table's irrep t as a.
// Branching files (branch_*.txt): "table <parent id> -> <subgroup id>" then
// lines "label -> terms".
// Lines starting with '#' are comments.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octgroups/character.hpp"
#include "octgroups/cyclotomic.hpp"

namespace octgroups {

class GoldenFormatError : public std::runtime_error {
 public:
  GoldenFormatError(const std::filesystem::path& file, std::size_t line, const std::string& what)
      : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what), file_(file) {}
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
};

/// Directory with the shipped reference files.
std::filesystem::path default_golden_dir();

struct GoldenCell {
  std::string printed_text;
  Cyclotomic printed;
  Cyclotomic value;  // corrected where the cell is annotated, else equal to printed
  bool annotated = false;
};

struct GoldenSize {
  long printed = 0;
  long value = 0;
  bool annotated = false;
};

struct GoldenTable {
  std::string id;
  std::filesystem::path file;
  std::vector<GoldenSize> sizes;
  std::map<std::string, std::vector<long>> orders;  // variant -> element orders
  std::vector<std::string> labels;
  std::vector<std::vector<GoldenCell>> rows;

  std::size_t label_index(const std::string& label) const;  // throws std::out_of_range
};

/// Expands mu, mu_bar, eta, eta_bar (optionally negated) or parses a z-expression.
Cyclotomic parse_golden_value(const std::string& token);

GoldenTable load_golden_table(const std::filesystem::path& file);

/// label -> multiplicity, from "1 + 3_1 + 2(6)"; repeated labels add up.
std::map<std::string, long> parse_terms(const std::string& text);
std::string format_terms(const std::vector<std::pair<std::string, long>>& terms);

struct TensorLine {
  std::size_t line = 0;
  std::string text;
  std::string left, right;
  std::map<std::string, long> terms;
  bool suspected_typo = false;
};

struct TensorFile {
  std::string table_id;
  std::filesystem::path file;
  std::map<std::string, std::string> relabel;  // table label -> label used in the list
  std::vector<TensorLine> lines;
};

TensorFile load_tensor_file(const std::filesystem::path& file);

struct BranchLine {
  std::size_t line = 0;
  std::string text;
  std::string parent;
  std::map<std::string, long> terms;
};

struct BranchFile {
  std::string parent_table, sub_table;
  std::filesystem::path file;
  std::vector<BranchLine> lines;
};

BranchFile load_branch_file(const std::filesystem::path& file);

/// golden column c is computed class class_map[c]; golden row r is computed irrep irrep_map[r].
struct Alignment {
  std::vector<std::size_t> class_map;
  std::vector<std::size_t> irrep_map;

  /// computed irrep index -> golden label
  std::vector<std::string> labels(const GoldenTable& golden) const;
};

struct FlaggedCell {
  std::string location;  // e.g. "row 2, column 2" or "size of column 5"
  std::string printed;
  std::string corrected;
  std::string computed;
};

struct AlignmentResult {
  std::vector<Alignment> alignments;  // distinct irrep maps, each with one class map
  std::vector<FlaggedCell> flagged;   // annotated cells under the first alignment
  std::vector<std::string> mismatches;
  bool ok() const { return !alignments.empty(); }
};

/// Searches class bijections that respect (size, order) and make the golden
/// rows equal the computed rows as multisets, then reads off the row bijection.
/// Annotated cells are matched with their corrected values.
AlignmentResult align_to_paper(const CharacterTable& T, const GoldenTable& golden, const std::string& orders_variant,
                               std::size_t max_class_maps = 200000);

/// Irrep names for output: reference labels under an alignment, else "d{degree}_{k}"
/// with k counting irreps of that degree in computed order.
struct Labeling {
  std::vector<std::string> labels;  // indexed by computed irrep
  std::vector<std::size_t> order;   // computed irreps in display order
  bool from_reference = false;

  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string& label) const;
};

Labeling canonical_labeling(const CharacterTable& T);
Labeling reference_labeling(const Alignment& alignment, const GoldenTable& golden);

/// Multiplicities as "a + 2(b)" in display order.
std::string format_decomposition(const std::vector<long>& multiplicities, const Labeling& labeling);
std::map<std::string, long> labeled_terms(const std::vector<long>& multiplicities, const Labeling& labeling);

struct LineCheck {
  std::size_t line = 0;
  std::string printed;   // the line as transcribed
  std::string computed;  // the same left-hand side with the computed right-hand side
  bool matches = false;
  bool suspected_typo = false;
};

/// Every line of a tensor file under one labeling, after the file's relabel map.
std::vector<LineCheck> check_tensor_file(const TensorFile& file, const CharacterTable& T, const Labeling& labeling);

/// Every line of a branching file; `branching` is branch(G, H, ...).
std::vector<LineCheck> check_branch_file(const BranchFile& file, const std::vector<std::vector<long>>& branching,
                                         const Labeling& parent, const Labeling& sub);

}  // namespace octgroups
