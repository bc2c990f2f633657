#pragma once

#include <stdexcept>
#include <string>

namespace evenh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. line/column are 1-based; 0 means unknown.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
      : Error(msg), line(line_), column(column_) {}
};

// Structurally well-formed input that violates a matrix contract
// (asymmetry, bad diagonal, odd off-diagonal label, index out of range).
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its domain: pair not in B, word not in
// the commutator subgroup, non-commuting elements, divisibility failure.
struct DomainError : Error {
  using Error::Error;
};

// A configured cap was exceeded. Deliberately distinct from DomainError:
// hitting a cap is not a mathematical statement about the input.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace evenh
