#include "qrsum/error.hpp"

namespace qrsum {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::OddExtensionDegree: return "OddExtensionDegree";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace qrsum
