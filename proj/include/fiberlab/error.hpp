#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberlab {

enum class ErrorKind {
  DivisionByZero,
  NonSquare,
  BothZero,
  NonConvergence,
  SyntaxError,
  UnknownSymbol,
  BasisNotClosed,
  HopfMapInconsistent,
  StepCapExceeded,
  CertificationFailed,
  MissingCoalgebraData,
  UnsupportedCentralShape,
  UnrecognizedRoot,
  ConsistencyViolation,
  CHViolation,
  IdentityViolation,
  PartitionMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine. The kind is stable and is what the CLI
/// maps to exit codes; the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse and validation failures with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace fiberlab
