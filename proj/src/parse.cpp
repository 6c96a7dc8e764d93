#include "sylver/parse.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sylver {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_bigint(std::string_view s, std::string_view what) {
  s = trim(s);
  bool negative = false;
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument(std::string(what) + ": expected an integer");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string(what) + ": invalid integer '" + std::string(s) + "'");
  const BigInt magnitude{std::string(digits)};
  return negative ? BigInt(-magnitude) : magnitude;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty value");
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s, "parse_rational"));
  const BigInt num = parse_bigint(s.substr(0, slash), "parse_rational");
  const BigInt den = parse_bigint(s.substr(slash + 1), "parse_rational");
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("parse_rational_list: empty list");
  std::vector<Rational> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

IntRange parse_int_range(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t dots = s.find("..");
  if (dots == std::string_view::npos)
    throw std::invalid_argument("parse_int_range: expected LO..HI, got '" + std::string(s) + "'");
  const BigInt lo = parse_bigint(s.substr(0, dots), "parse_int_range");
  const BigInt hi = parse_bigint(s.substr(dots + 2), "parse_int_range");
  IntRange r;
  r.lo = lo.convert_to<std::int64_t>();
  r.hi = hi.convert_to<std::int64_t>();
  if (r.lo > r.hi) throw std::invalid_argument("parse_int_range: empty range '" + std::string(s) + "'");
  return r;
}

std::vector<int> parse_int_list(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("parse_int_list: empty list");
  std::vector<int> out;
  for (std::string_view part : split(text, ','))
    out.push_back(parse_bigint(part, "parse_int_list").convert_to<int>());
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("parse_double_list: empty list");
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) {
    const std::string_view p = trim(part);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc{} || end != p.data() + p.size())
      throw std::invalid_argument("parse_double_list: invalid number '" + std::string(p) + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace sylver
