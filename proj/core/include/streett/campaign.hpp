#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "streett/ranking.hpp"
#include "streett/verifier.hpp"

namespace streett {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PairPolicy { all_pairs, sample };
std::string_view to_string(PairPolicy policy);

struct ExponentPair {
  std::uint32_t a = 1;
  std::uint32_t b = 1;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Configuration of one verification campaign over the (n, k) instance.
/// Exponents must all be >= 1 so both words of a pair occur infinitely often
/// in the periodic check words. sample_count/seed are meaningful only under
/// the sample policy.
struct CampaignConfig {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  PairPolicy pair_policy = PairPolicy::all_pairs;
  std::uint32_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<ExponentPair> exponents{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::size_t path_cap = kDefaultPathCap;
  std::uint64_t enumeration_budget = 256;
  std::uint32_t threads = 0;  // 0 = hardware concurrency

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// Structural verdicts plus the periodic-rejection check for one ranking.
struct RankingVerdict {
  std::string ranking;
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  bool p4 = false;
  bool streett_rejected = false;  // (word)^ω must not be accepted
  bool rabin_accepted = false;    // dual check on the same lasso, with valid witness

  bool pass() const { return p1 && p2 && p3 && p4 && streett_rejected && rabin_accepted; }

  friend bool operator==(const RankingVerdict&, const RankingVerdict&) = default;
};

/// Mixed-period acceptance check for one ordered pair f != f' and one
/// exponent pair: (word_f^a · word_f'^b)^ω must be accepted with a witness
/// that replays.
struct PairVerdict {
  std::string f;
  std::string f_prime;
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  bool accepted = false;
  bool witness_valid = false;

  bool pass() const { return accepted && witness_valid; }

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

struct CampaignReport {
  std::string tool;
  std::string version;
  CampaignConfig config;
  std::string ranking_count;  // exact n!·(k!)^n, decimal
  std::vector<RankingVerdict> rankings;
  std::vector<PairVerdict> pairs;
  std::string lower_bound_states;  // = ranking_count
  std::string lower_bound_statement;
  bool overall_pass = false;
  std::uint64_t structural_ms = 0;
  std::uint64_t pairs_ms = 0;
  std::uint64_t wall_ms = 0;

  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

/// True iff every individual verdict passes; overall_pass is computed from
/// this at campaign time.
bool all_verdicts_pass(const CampaignReport& report);

/// Runs the whole campaign: per ranking the four structural checks and the
/// periodic rejection/dual acceptance, per selected ordered pair and exponent
/// the mixed-period acceptance. Fans work out to a thread pool; inputs are
/// immutable and results are reduced deterministically. Throws
/// BudgetExceeded when all_pairs would enumerate more rankings than the
/// configured budget.
CampaignReport run_campaign(const CampaignConfig& config);

std::string report_to_string(const CampaignReport& report);
CampaignReport parse_report_string(const std::string& text);

void emit_report(const CampaignReport& report, const std::filesystem::path& path);
CampaignReport parse_report(const std::filesystem::path& path);

}  // namespace streett
