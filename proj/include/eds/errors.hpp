#pragma once

#include <stdexcept>
#include <string>

namespace eds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (zero divisor, wrong field, singular curve...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic on elements of two different fields.
class FieldMismatch : public DomainError {
 public:
  FieldMismatch() : DomainError("operands belong to different fields") {}
  explicit FieldMismatch(const std::string& what) : DomainError(what) {}
};

/// An internal assertion that should hold for every valid input failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace eds
