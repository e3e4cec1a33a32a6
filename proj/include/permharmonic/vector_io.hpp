#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permharmonic {

/// Parses decimals separated by newlines, commas or blanks. Throws std::invalid_argument.
std::vector<double> parse_vector(std::string_view text);

/// One value per line, 15 significant digits.
std::string format_text(std::span<const double> values);

/// A single comma-separated row, 15 significant digits.
std::string format_csv(std::span<const double> values);

} // namespace permharmonic
