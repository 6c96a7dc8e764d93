#pragma once

#include <string_view>
#include <vector>

#include "sylver/campaign.hpp"
#include "sylver/rational.hpp"

namespace sylver {

/// Command-line value parsers. All throw std::invalid_argument with a
/// human-readable message on malformed input.
Rational parse_rational(std::string_view text);                    // "7", "-3/4"
std::vector<Rational> parse_rational_list(std::string_view text);  // comma separated
IntRange parse_int_range(std::string_view text);                   // "2..8"
std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

}  // namespace sylver
