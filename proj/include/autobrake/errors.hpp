#pragma once

#include <stdexcept>
#include <string>

namespace autobrake {

// Bad shapes, bad config keys/values, architecture mismatches.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values encountered mid-computation. State is left untouched
// by the operation that throws.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input on a stream; message carries the byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long long byte_offset)
      : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  long long offset;
};

}  // namespace autobrake
