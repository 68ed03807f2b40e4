#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "apring/errors.hpp"

namespace apring {

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw IoError("float formatting failed");
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const std::from_chars_result res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw SpecParseError("not a number: '" + text + "'");
  return value;
}

}  // namespace apring
