#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scd {

enum class ErrorCode {
  DuplicateName,
  UnknownName,
  CycleDetected,
  CarrierMismatch,
  CarrierTooLarge,
  NotALattice,
  NotACompleteLattice,
  NotT0,
  NotATopology,
  UnsupportedKind,
  InternalInconsistency,
  UnknownModel,
  ElementOutOfFamily,
  SyntaxError,
  UnsupportedFormat,
  BadArity,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input-file diagnostic; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace scd
