#pragma once

// Claim-by-claim verification of the group-theoretic statements about the
// roster groups. Each claim is evaluated lazily, so a filter only pays for the
// groups its claims touch.
//
// Status semantics: pass = computed equals expected; fail = it does not;
// flagged = it does not, at a place annotated in advance as a suspected
// misprint (a "!" cell in a reference file, or one of the known generator and
// caption misprints listed in the claim catalogue).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace octgroups {

enum class ClaimStatus { pass, fail, flagged };

std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  std::string paper_anchor;
  ClaimStatus status = ClaimStatus::pass;
  std::string computed;
  std::string expected;
};

struct VerificationReport {
  std::vector<ClaimResult> results;

  std::size_t count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::fail) == 0; }
};

struct VerifyOptions {
  std::filesystem::path golden_dir;  // empty: default_golden_dir()
  std::optional<std::string> filter;  // ECMAScript regex searched in claim ids
};

/// Ids of every registered claim, in report order.
std::vector<std::string> claim_ids();

/// Throws std::regex_error for a malformed filter.
VerificationReport verify_all(const VerifyOptions& options = {});

/// JSON array of {claim_id, paper_anchor, status, computed, expected}, keys in that order.
std::string report_json(const VerificationReport& report, int indent = 2);
std::string report_text(const VerificationReport& report);

}  // namespace octgroups
