#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtopo {

// Raised when an operation's precondition is violated (unknown face, empty
// facet, parameter out of bounds, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. `line()` is 1-based.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dtopo
