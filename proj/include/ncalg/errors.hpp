#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, presentation file or assignment file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), detail_(what), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Operands live in different fields, alphabets, sizes or truncation caps.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of a non-unit.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A reduction or retry budget ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A critical pair reduced to a nonzero scalar: the quotient algebra is zero.
class QuotientCollapse : public Error {
 public:
  using Error::Error;
};

}  // namespace ncalg
