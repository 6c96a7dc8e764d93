#pragma once

#include <cstdint>
#include <string>

#include "sylver/campaign.hpp"
#include "sylver/reports.hpp"
#include "sylver/stability.hpp"

namespace sylver {

/// One-line serializations of the record types. Every json line is a single
/// self-describing object (a "type" field names the record kind) so streams
/// of mixed records stay machine-readable. The *_from_json_line functions
/// invert the emitters exactly and throw std::invalid_argument on malformed
/// input.
std::string to_json_line(const IdentityReport& r);
std::string to_pretty_line(const IdentityReport& r);
IdentityReport report_from_json_line(const std::string& line);

std::string to_json_line(const StabilityRecord& r);
std::string to_pretty_line(const StabilityRecord& r);
StabilityRecord stability_from_json_line(const std::string& line);

std::string to_json_line(const StabilitySummary& s);
std::string to_pretty_line(const StabilitySummary& s);

std::string campaign_failure_json_line(const TrialFailure& f, std::uint64_t seed);
std::string campaign_failure_pretty_line(const TrialFailure& f, std::uint64_t seed);
TrialFailure campaign_failure_from_json_line(const std::string& line);

std::string campaign_summary_json_line(const CampaignConfig& cfg, const CampaignResult& res);
std::string campaign_summary_pretty_line(const CampaignConfig& cfg, const CampaignResult& res);

}  // namespace sylver
