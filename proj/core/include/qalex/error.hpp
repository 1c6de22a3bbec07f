#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qalex {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Operands that violate an operation's precondition (group mismatch,
/// non-square determinant, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic overflowed int64.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// One failed instance of an axiom or identity. `witness` holds the
/// offending indices (elements, arcs, crossings) in the order the axiom
/// names them.
struct Violation {
  std::string rule;
  std::vector<long long> witness;
  std::string detail;
};

using Report = std::vector<Violation>;

std::string to_string(const Violation& v);

}  // namespace qalex
