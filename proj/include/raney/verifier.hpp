#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "raney/structures.hpp"

namespace raney {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  /// Failure message or skip reason; empty on pass.
  std::string reason;
  /// Counterexample, present on every failure.
  std::optional<nlohmann::json> witness;
  double elapsed_ms = 0.0;
};

struct Summary {
  bool is_cd = false;
  bool is_distributive = false;
  std::size_t automorphism_count = 0;
  /// Absent when the homset (or the search behind the flag) exceeds a cap.
  std::optional<std::size_t> homset_size;
  std::optional<bool> is_girard;
  std::optional<std::size_t> dualizing_count;
  std::optional<std::size_t> cyclic_count;
  std::optional<bool> tight_unital;
  std::string autodual_verdict = "inconclusive";
};

struct Report {
  std::string name;
  std::size_t size = 0;
  std::string hash;
  std::vector<CheckResult> checks;
  /// Absent for reports on an abstract quantale.
  std::optional<Summary> summary;

  std::size_t failed() const;
  std::size_t skipped() const;
};

struct Config {
  std::size_t max_homset = kDefaultMaxHomset;
  std::size_t max_autodual = kDefaultMaxAutodual;
  /// Checks quantifying over triples of maps run only when |Q| <= triple_cap.
  std::size_t triple_cap = 512;
  /// Checks quantifying over pairs of maps run only when |Q| <= pair_cap.
  std::size_t pair_cap = 2000;
  /// Empty runs everything.
  std::set<std::string> checks;
  bool timing = false;
};

/// Every check id of the lattice suite followed by those of the M5 suite.
const std::vector<std::string>& lattice_check_ids();
const std::vector<std::string>& m5_check_ids();

/// Throws precondition naming the first unknown id.
std::set<std::string> parse_check_list(const std::string& comma_list);

struct CorpusEntry {
  std::string name;
  LatticePtr lattice;
  /// Set when the lattice is the downset lattice of this poset.
  std::optional<Poset> poset;
};

/// Chains 1-5, Boolean 1-3, M3, M5, N5 and downset lattices of the posets
/// with at most three elements, one per isomorphism type.
std::vector<CorpusEntry> default_corpus();

Summary summarize(const CorpusEntry& entry, const Config& config);
Report analyze(const CorpusEntry& entry, const Config& config);
Report run_suite(const CorpusEntry& entry, const Config& config);
Report run_m5_suite(const Config& config);

nlohmann::json report_to_json(const Report& report, bool timing);
std::string report_to_text(const Report& report, bool timing);
nlohmann::json reports_to_json(const std::vector<Report>& reports, bool timing);
std::string reports_to_text(const std::vector<Report>& reports, bool timing);

}  // namespace raney
