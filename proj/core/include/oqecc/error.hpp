#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oqecc {

enum class ErrorCode {
  NotPrime,
  FieldTooLarge,
  OutOfRange,
  NotInSubfield,
  DimensionMismatch,
  LayoutMismatch,
  ZeroCode,
  CapExceeded,
  ParseError,
  InvalidEncoding,
  NonCommutingLift,
  RankMismatch,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorCode code);

// True for codes that signal a violated algebraic identity rather than bad
// input: these must never fire on a correct implementation.
bool is_theory_violation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oqecc
