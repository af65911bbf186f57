#pragma once

#include <stdexcept>
#include <string>

namespace lesac {

enum class ErrorCode {
  SyntaxError,
  DuplicateId,
  UnknownPrinciple,
  UnboundVariable,
  NoConstants,
  InconsistentPreference,
  ExplosionGuard,
  NotAccepted,
  EmptyInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& msg)
      : Error(ErrorCode::SyntaxError, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lesac
