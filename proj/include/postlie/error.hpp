#pragma once

#include <stdexcept>
#include <string>

namespace postlie {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Shapes of operands do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A map or form that has to be invertible is not.
class SingularError : public Error {
 public:
  using Error::Error;
};

class UnknownOperation : public Error {
 public:
  explicit UnknownOperation(const std::string& name)
      : Error("unknown operation '" + name + "'") {}
};

/// Malformed text; line and column are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace postlie
