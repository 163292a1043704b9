#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "copwin/ordinal.hpp"

namespace copwin {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::vector<Ordinal> gammas;           // infinite limit ordinals
  std::vector<std::uint64_t> tail_lengths{1, 2, 3};
  std::vector<std::size_t> truncation_sizes{4, 6, 8};
  std::size_t samples_per_claim = 1000;
  std::size_t survival_budget_max = 20;
  std::size_t corpus_size = 200;  // random graphs with <= 8 vertices

  static SuiteConfig defaults();
  /// Flat key=value lines; ordinals in the `w` grammar; `#` comments.
  static SuiteConfig from_stream(std::istream& in);
  void validate() const;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;
  std::vector<std::string> failures;
  std::vector<std::string> flags;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  /// Claim-coverage ledger: every tracked claim id and its audit
  /// status; the `all` suite fails when one is missing.
  std::map<std::string, std::string> claims;
  /// Environment / timing data, excluded from determinism comparisons.
  std::map<std::string, std::string> environment;

  bool ok() const;
};

/// Suite names: finite-oracle, nw-equivalence, paths, truncation,
/// lemma-certificates, simulation, survival, section4-variant, all.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const SuiteConfig& config);

/// All claim ids the coverage ledger tracks.
const std::vector<std::string>& tracked_claim_ids();

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string report_to_table(const Report& report);

}  // namespace copwin
