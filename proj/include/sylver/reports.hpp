#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sylver/field.hpp"

namespace sylver {

inline std::string render_value(const Rational& v) { return v.str(); }
inline std::string render_value(const PrimeFieldElement& v) { return v.str(); }
inline std::string render_value(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

template <FieldElement K>
std::string render_node_list(std::span<const K> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += render_value(xs[i]);
  }
  return out;
}

template <FieldElement K>
std::string render_node_list(const std::vector<K>& xs) {
  return render_node_list(std::span<const K>(xs));
}

/// Typed result of one identity check: the compared values plus the verdict.
/// Scalar identities compare a single pair; coefficient-wise identities
/// compare one pair per coefficient. `pass` is set only for exact fields;
/// float64 outcomes leave it empty and are reported as relative errors.
template <FieldElement K>
struct CheckOutcome {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> int_params;
  std::vector<std::pair<std::string, K>> value_params;
  std::vector<K> lhs;
  std::vector<K> rhs;
  std::vector<std::pair<std::string, K>> extras;
  std::optional<bool> pass;

  void settle() {
    if constexpr (is_exact_field_v<K>) {
      bool ok = lhs.size() == rhs.size();
      for (std::size_t i = 0; ok && i < lhs.size(); ++i) ok = lhs[i] == rhs[i];
      pass = ok;
    } else {
      pass = std::nullopt;
    }
  }
};

/// Rendered, field-agnostic form of a CheckOutcome; what the CLI emits and
/// what tests re-parse.
struct IdentityReport {
  std::string identity;
  std::string field;
  std::optional<std::uint64_t> prime;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::vector<std::pair<std::string, std::string>> extras;
  std::optional<bool> pass;
  std::optional<double> relative_error;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline double relative_error_of(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

template <FieldElement K>
IdentityReport to_report(const CheckOutcome<K>& c) {
  IdentityReport r;
  r.identity = c.identity;
  r.field = FieldName<K>::value;
  if constexpr (std::is_same_v<K, PrimeFieldElement>) {
    if (!c.lhs.empty()) r.prime = c.lhs.front().modulus();
  }
  for (const auto& [k, v] : c.int_params) r.params.emplace_back(k, std::to_string(v));
  for (const auto& [k, v] : c.value_params) r.params.emplace_back(k, render_value(v));
  for (const K& v : c.lhs) r.lhs.push_back(render_value(v));
  for (const K& v : c.rhs) r.rhs.push_back(render_value(v));
  for (const auto& [k, v] : c.extras) r.extras.emplace_back(k, render_value(v));
  r.pass = c.pass;
  if constexpr (!is_exact_field_v<K>) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.lhs.size() && i < c.rhs.size(); ++i)
      worst = std::max(worst, relative_error_of(static_cast<double>(c.lhs[i]),
                                                static_cast<double>(c.rhs[i])));
    r.relative_error = worst;
  }
  return r;
}

}  // namespace sylver
