#pragma once

// Text forms of words and tables.
//
// Input: either a compact digit string ("241350", at most 10 digits, one
// value per digit) or comma-separated integers ("2,4,1,3,5,0"). The empty
// string is the empty sequence.
// Output: permutations print compact when n <= 10 and comma-separated
// otherwise; tables always print comma-separated.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mahonian/inversion_table.hpp"
#include "mahonian/permutation.hpp"

namespace mahonian {

inline constexpr std::size_t kCompactLimit = 10;

/// Throws InvalidInput whose index is the offending token.
inline std::vector<std::int64_t> parse_sequence(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;

  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InvalidInput("invalid character '" + std::string(1, text[i]) +
                               "' at token " + std::to_string(i),
                           i);
      }
    }
    if (text.size() > kCompactLimit) {
      throw InvalidInput("compact form is limited to " +
                             std::to_string(kCompactLimit) +
                             " digits; use comma-separated values",
                         kCompactLimit);
    }
    for (char ch : text) out.push_back(ch - '0');
    return out;
  }

  std::size_t token = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view raw = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front())))
      raw.remove_prefix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
      raw.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (raw.empty() || ec != std::errc{} || ptr != raw.data() + raw.size()) {
      throw InvalidInput("invalid token '" + std::string(raw) + "' at token " +
                             std::to_string(token),
                         token);
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    ++token;
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  return make_permutation(parse_sequence(text));
}

inline InversionTable parse_table(std::string_view text) {
  return make_table(parse_sequence(text));
}

inline std::string format_permutation(const Permutation& p) {
  std::string s;
  const bool compact = p.size() <= kCompactLimit;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

inline std::string format_table(const InversionTable& t) {
  std::string s;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j > 0) s += ',';
    s += std::to_string(t[j]);
  }
  return s;
}

}  // namespace mahonian
