#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylver/field.hpp"
#include "sylver/reports.hpp"

namespace sylver {

enum class IdentityId {
  euler,
  sylvester,
  extended_euler,
  f2,
  newton,
  dilcher,
  egf,
  extended_sylvester,
};

std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<std::string>& identity_names();

/// Inclusive integer range, rendered as "lo..hi".
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

std::string to_string(const IntRange& r);

/// Randomized verification campaign. Per-identity parameter policy:
///   euler, extended_euler   d (and m) uniform in [0, n-1]; d_range unused
///   sylvester               d uniform in d_range
///   newton, dilcher         d uniform in d_range clamped to d >= 1
///   extended_sylvester      d = max(n, draw from d_range)
///   egf                     truncation order = max(n-1, draw from d_range)
///   f2                      d unused; the scalar a is drawn per trial
/// dilcher runs over rationals only, and float64 has no pass verdict, so
/// campaigns accept only exact fields.
struct CampaignConfig {
  std::string identity = "sylvester";
  std::uint64_t trials = 100;
  IntRange n_range{2, 8};
  IntRange d_range{0, 40};
  FieldConfig field = FieldConfig::prime();
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Throws std::invalid_argument when the configuration is unusable: unknown
/// identity, trials == 0, n_range.lo < 2, d_range.lo < 0, an empty range,
/// threads == 0, a float64 field, dilcher over a prime field, or a prime
/// modulus too small for the requested node counts (and, for egf, for the
/// factorials up to the truncation order).
void validate(const CampaignConfig& cfg);

struct TrialFailure {
  std::uint64_t index = 0;
  IdentityReport report;
};

struct CampaignResult {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<TrialFailure> failures;  // sorted by trial index
};

/// Runs the campaign. Trial i draws everything from a fresh generator seeded
/// with trial_seed(cfg.seed, i), so results are a pure function of the config
/// and in particular independent of cfg.threads.
CampaignResult run_campaign(const CampaignConfig& cfg);

}  // namespace sylver
