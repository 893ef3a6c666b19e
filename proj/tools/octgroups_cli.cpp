// octgroups: character tables, tensor products, branchings and claim
// verification for the octonionic signed-permutation groups.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octgroups/cli.hpp"

int main(int argc, char** argv) {
  using namespace octgroups;
  CLI::App app{"Exact character theory of the octonionic groups of order 1344 and their subgroups"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string golden_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--golden-dir", golden_dir, "Directory of reference tables");

  std::string group, subgroup, left, right;
  std::vector<std::string> factors;
  std::string filter;

  auto* chartab = app.add_subcommand("chartab", "Print the character table of a roster group");
  chartab->add_option("group", group, "Roster group name, e.g. 2^3.PSL2(7)")->required();

  auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product of two irreps");
  tensor->add_option("group", group)->required();
  tensor->add_option("left", left, "Irrep label")->required();
  tensor->add_option("right", right, "Irrep label")->required();

  auto* branch = app.add_subcommand("branch", "Restrict every irrep of a group to a subgroup");
  branch->add_option("group", group)->required();
  branch->add_option("subgroup", subgroup)->required();

  auto* verify = app.add_subcommand("verify", "Check every registered claim");
  verify->add_option("--filter", filter, "Regex searched in claim ids");

  auto* octmul = app.add_subcommand("octmul", "Multiply octonion expressions left to right");
  octmul->add_option("factors", factors, "Expressions such as e1 or \"1/2 + 1/2*e3\"")->required();

  // Global flags are accepted after the subcommand as well.
  for (auto* sub : {chartab, tensor, branch, verify, octmul}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CliOptions options;
    options.format = parse_format(format);
    options.golden_dir = golden_dir;
    OutputDocument doc;
    if (*chartab) {
      doc = cmd_chartab(group, options);
    } else if (*tensor) {
      doc = cmd_tensor(group, left, right, options);
    } else if (*branch) {
      doc = cmd_branch(group, subgroup, options);
    } else if (*verify) {
      doc = cmd_verify(verify->count("--filter") ? std::optional<std::string>(filter) : std::nullopt, options);
    } else {
      doc = cmd_octmul(factors, options);
    }
    std::cout << doc.payload;
    return doc.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
