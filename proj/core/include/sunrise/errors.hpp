#pragma once

#include <stdexcept>
#include <string>

namespace sunrise {

/// Raised when an input violates an operation's domain (bad alpha, empty
/// set, zero weight where positivity is required, ...).  The CLI maps this
/// to exit code 3.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when textual input (rational strings, set shorthand, JSON
/// documents) cannot be parsed.  The CLI maps this to exit code 2.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sunrise
