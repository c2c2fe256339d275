#pragma once

#include <stdexcept>
#include <string>

namespace coxdiag {

// Base for every failure that is the caller's fault (bad input, violated
// precondition). The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search or closure outgrew its configured limit.
class LimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed text input; carries a 1-based line and column.
class ParseError : public DomainError {
 public:
  ParseError(int line, int column, const std::string& what)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Broken internal invariant. Never caught by library code.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxdiag
