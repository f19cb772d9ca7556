#include "oqecc/error.hpp"

namespace oqecc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidEncoding: return "InvalidEncoding";
    case ErrorCode::NonCommutingLift: return "NonCommutingLift";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_theory_violation(ErrorCode code) {
  return code == ErrorCode::NotInSubfield || code == ErrorCode::NonCommutingLift ||
         code == ErrorCode::RankMismatch || code == ErrorCode::InvariantViolation;
}

}  // namespace oqecc
