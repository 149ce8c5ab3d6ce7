#pragma once

// Small tokenizing helpers shared by the textual spec parsers.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "opmeans/error.hpp"

namespace opmeans::text {

struct Token {
  std::string_view text;
  std::size_t offset;  // position of the token inside the full input
};

inline std::vector<Token> split(std::string_view s, char sep, std::size_t base = 0) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back({s.substr(start, i - start), base + start});
      start = i + 1;
    }
  }
  return out;
}

inline double parse_double(const Token& tok, std::string_view what) {
  double value = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.text.empty() || ec != std::errc() || ptr != last) {
    const std::size_t bad = tok.offset + static_cast<std::size_t>(ptr - first);
    throw ParseError("expected a number for " + std::string(what) + ", got '" +
                         std::string(tok.text) + "'",
                     tok.text.empty() ? tok.offset : bad);
  }
  return value;
}

inline int parse_int(const Token& tok, std::string_view what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.text.empty() || ec != std::errc() || ptr != last) {
    const std::size_t bad = tok.offset + static_cast<std::size_t>(ptr - first);
    throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                         std::string(tok.text) + "'",
                     tok.text.empty() ? tok.offset : bad);
  }
  return value;
}

}  // namespace opmeans::text
