#include "permharmonic/vector_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace permharmonic {

namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == ';';
}

std::string format15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

} // namespace

std::vector<double> parse_vector(std::string_view text) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j]))
      ++j;
    const std::string_view token = text.substr(i, j - i);
    // from_chars rejects a leading '+', which is common in hand-written input.
    const bool plus = token.front() == '+';
    const std::string_view digits = plus ? token.substr(1) : token;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if ((plus && digits.starts_with('-')) || ec != std::errc() ||
        ptr != digits.data() + digits.size() || !std::isfinite(value))
      throw std::invalid_argument("not a finite number: \"" + std::string(token) + "\"");
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string format_text(std::span<const double> values) {
  std::string out;
  for (double v : values) {
    out += format15(v);
    out += '\n';
  }
  return out;
}

std::string format_csv(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ',';
    out += format15(values[i]);
  }
  out += '\n';
  return out;
}

} // namespace permharmonic
