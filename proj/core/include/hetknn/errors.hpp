#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hetknn {

/// Thrown when a caller breaks an operation's precondition (bad index, wrong
/// kind, Missing operand, invalid matrix, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed typed-CSV input. `row` and `column` are 1-based; row 0 denotes
/// the header line and column 0 a whole-line problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& message);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace hetknn
