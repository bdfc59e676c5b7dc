#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphent {

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a structural invariant (self-loop, gap in
// vertex ids, non-normalized distribution, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds a hard size limit of an exact algorithm.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace graphent
