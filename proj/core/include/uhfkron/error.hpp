#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uhfkron {

enum class ErrorCode {
  validation,          // malformed input: index out of range, bad dimension, ...
  signature_mismatch,  // operands live over different signatures
  resource,            // dense materialization guard exceeded
  parse,               // expression or state syntax error
  consistency,         // an internal identity failed numerically
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace uhfkron
