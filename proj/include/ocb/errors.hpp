#pragma once

#include <stdexcept>
#include <string>

namespace ocb {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed recipe or serialized input. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A series could not be evaluated (division by zero series, bad arguments).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class CoprimalityError : public Error {
 public:
  using Error::Error;
};

// Not enough known coefficients to decide the question asked.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// The target cannot be written in the order complete basis.
class GapError : public Error {
 public:
  using Error::Error;
};

// A postcondition the algorithms rely on failed. Indicates a bug.
class InternalContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ocb
