#pragma once

// Library side of the command-line tool. Each command builds an output
// document from library calls; the executable only parses arguments.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace octgroups {

enum class Format { text, json };

/// Throws UsageError for anything other than "text" or "json".
Format parse_format(const std::string& s);

struct OutputDocument {
  Format format = Format::text;
  std::string payload;
  int exit_code = 0;  // 0 success, 1 verification failure
};

/// Bad group names, labels, or argument combinations; the tool exits with 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliOptions {
  Format format = Format::text;
  std::filesystem::path golden_dir;  // empty: default_golden_dir()
};

OutputDocument cmd_chartab(const std::string& group, const CliOptions& options);
OutputDocument cmd_tensor(const std::string& group, const std::string& left, const std::string& right, const CliOptions& options);
OutputDocument cmd_branch(const std::string& group, const std::string& subgroup, const CliOptions& options);
OutputDocument cmd_verify(const std::optional<std::string>& filter, const CliOptions& options);
/// Product of octonion expressions such as "e1", "1 - 1/2*e3", taken left to right.
OutputDocument cmd_octmul(const std::vector<std::string>& factors, const CliOptions& options);

}  // namespace octgroups
