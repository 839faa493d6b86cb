#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fastdiam {

/// Thrown when a caller violates an operation's preconditions (bad dimension,
/// empty set, out-of-range index, unsupported dimension for a certificate).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the input is geometrically degenerate for the requested
/// construction, e.g. every point coincides so no direction is defined.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed dataset text. `line()` is 1-based; 0 means "whole file".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fastdiam
