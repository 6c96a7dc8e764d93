#include "sylver/render.hpp"

#include <stdexcept>

#include <json.hpp>

namespace sylver {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json values_to_json(const std::vector<std::string>& vs) {
  if (vs.size() == 1) return vs.front();
  ordered_json arr = ordered_json::array();
  for (const std::string& v : vs) arr.push_back(v);
  return arr;
}

std::vector<std::string> values_from_json(const ordered_json& j) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) throw std::invalid_argument("record value must be a string or array");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

std::string values_to_pretty(const std::vector<std::string>& vs) {
  if (vs.size() == 1) return vs.front();
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != 0) out += ',';
    out += vs[i];
  }
  out += ']';
  return out;
}

ordered_json report_to_json(const IdentityReport& r) {
  ordered_json j;
  j["type"] = "identity_report";
  j["identity"] = r.identity;
  j["field"] = r.field;
  if (r.prime) j["prime"] = *r.prime;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["lhs"] = values_to_json(r.lhs);
  j["rhs"] = values_to_json(r.rhs);
  if (!r.extras.empty()) {
    ordered_json extras = ordered_json::object();
    for (const auto& [k, v] : r.extras) extras[k] = v;
    j["extras"] = extras;
  }
  if (r.pass) j["pass"] = *r.pass;
  if (r.relative_error) j["relative_error"] = *r.relative_error;
  return j;
}

IdentityReport report_from_json(const ordered_json& j) {
  if (j.value("type", "") != std::string("identity_report"))
    throw std::invalid_argument("not an identity_report record");
  IdentityReport r;
  r.identity = j.at("identity").get<std::string>();
  r.field = j.at("field").get<std::string>();
  if (j.contains("prime")) r.prime = j.at("prime").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  r.lhs = values_from_json(j.at("lhs"));
  r.rhs = values_from_json(j.at("rhs"));
  if (j.contains("extras"))
    for (const auto& [k, v] : j.at("extras").items())
      r.extras.emplace_back(k, v.get<std::string>());
  if (j.contains("pass")) r.pass = j.at("pass").get<bool>();
  if (j.contains("relative_error")) r.relative_error = j.at("relative_error").get<double>();
  return r;
}

ordered_json parse_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed json record");
  return j;
}

}  // namespace

std::string to_json_line(const IdentityReport& r) { return report_to_json(r).dump(); }

std::string to_pretty_line(const IdentityReport& r) {
  std::string out = "identity=" + r.identity + " field=" + r.field;
  if (r.prime) out += " prime=" + std::to_string(*r.prime);
  for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
  out += " lhs=" + values_to_pretty(r.lhs);
  out += " rhs=" + values_to_pretty(r.rhs);
  for (const auto& [k, v] : r.extras) out += " " + k + "=" + v;
  if (r.pass) out += std::string(" pass=") + (*r.pass ? "true" : "false");
  if (r.relative_error) out += " relative_error=" + render_value(*r.relative_error);
  return out;
}

IdentityReport report_from_json_line(const std::string& line) {
  return report_from_json(parse_line(line));
}

std::string to_json_line(const StabilityRecord& r) {
  ordered_json j;
  j["type"] = "stability_record";
  j["n"] = r.n;
  j["d"] = r.d;
  j["node_spread"] = r.node_spread;
  j["rel_error_lhs"] = r.rel_error_lhs;
  j["rel_error_rhs"] = r.rel_error_rhs;
  j["overflow"] = r.overflow;
  return j.dump();
}

std::string to_pretty_line(const StabilityRecord& r) {
  std::string out = "stability n=" + std::to_string(r.n) + " d=" + std::to_string(r.d);
  out += " node_spread=" + render_value(r.node_spread);
  out += " rel_error_lhs=" + render_value(r.rel_error_lhs);
  out += " rel_error_rhs=" + render_value(r.rel_error_rhs);
  out += std::string(" overflow=") + (r.overflow ? "true" : "false");
  return out;
}

StabilityRecord stability_from_json_line(const std::string& line) {
  const ordered_json j = parse_line(line);
  if (j.value("type", "") != std::string("stability_record"))
    throw std::invalid_argument("not a stability_record record");
  StabilityRecord r;
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.node_spread = j.at("node_spread").get<double>();
  r.rel_error_lhs = j.at("rel_error_lhs").get<double>();
  r.rel_error_rhs = j.at("rel_error_rhs").get<double>();
  r.overflow = j.at("overflow").get<bool>();
  return r;
}

std::string to_json_line(const StabilitySummary& s) {
  ordered_json j;
  j["type"] = "stability_summary";
  j["n"] = s.n;
  j["d"] = s.d;
  j["spread"] = s.spread;
  j["trials"] = s.trials;
  j["median_rel_error_lhs"] = s.median_rel_error_lhs;
  j["max_rel_error_lhs"] = s.max_rel_error_lhs;
  j["median_rel_error_rhs"] = s.median_rel_error_rhs;
  j["max_rel_error_rhs"] = s.max_rel_error_rhs;
  j["overflows"] = s.overflows;
  return j.dump();
}

std::string to_pretty_line(const StabilitySummary& s) {
  std::string out = "stability-summary n=" + std::to_string(s.n) + " d=" + std::to_string(s.d);
  out += " spread=" + render_value(s.spread) + " trials=" + std::to_string(s.trials);
  out += " median_rel_error_lhs=" + render_value(s.median_rel_error_lhs);
  out += " max_rel_error_lhs=" + render_value(s.max_rel_error_lhs);
  out += " median_rel_error_rhs=" + render_value(s.median_rel_error_rhs);
  out += " max_rel_error_rhs=" + render_value(s.max_rel_error_rhs);
  out += " overflows=" + std::to_string(s.overflows);
  return out;
}

std::string campaign_failure_json_line(const TrialFailure& f, std::uint64_t seed) {
  ordered_json j;
  j["type"] = "campaign_failure";
  j["trial"] = f.index;
  j["seed"] = seed;
  j["report"] = report_to_json(f.report);
  return j.dump();
}

std::string campaign_failure_pretty_line(const TrialFailure& f, std::uint64_t seed) {
  return "FAIL trial=" + std::to_string(f.index) + " seed=" + std::to_string(seed) + " " +
         to_pretty_line(f.report);
}

TrialFailure campaign_failure_from_json_line(const std::string& line) {
  const ordered_json j = parse_line(line);
  if (j.value("type", "") != std::string("campaign_failure"))
    throw std::invalid_argument("not a campaign_failure record");
  TrialFailure f;
  f.index = j.at("trial").get<std::uint64_t>();
  f.report = report_from_json(j.at("report"));
  return f;
}

std::string campaign_summary_json_line(const CampaignConfig& cfg, const CampaignResult& res) {
  ordered_json j;
  j["type"] = "campaign_summary";
  j["identity"] = cfg.identity;
  j["field"] = cfg.field.name();
  if (cfg.field.kind == FieldKind::prime) j["prime"] = cfg.field.p;
  j["trials"] = res.trials;
  j["passed"] = res.passed;
  j["failed"] = res.failed;
  j["seed"] = cfg.seed;
  j["n_range"] = to_string(cfg.n_range);
  j["d_range"] = to_string(cfg.d_range);
  return j.dump();
}

std::string campaign_summary_pretty_line(const CampaignConfig& cfg, const CampaignResult& res) {
  std::string out = "campaign identity=" + cfg.identity + " field=" + cfg.field.name();
  if (cfg.field.kind == FieldKind::prime) out += " prime=" + std::to_string(cfg.field.p);
  out += " trials=" + std::to_string(res.trials);
  out += " passed=" + std::to_string(res.passed);
  out += " failed=" + std::to_string(res.failed);
  out += " seed=" + std::to_string(cfg.seed);
  out += " n_range=" + to_string(cfg.n_range);
  out += " d_range=" + to_string(cfg.d_range);
  return out;
}

}  // namespace sylver
