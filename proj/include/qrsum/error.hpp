#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrsum {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  InvalidArgument,
  ParseError,
  ShapeMismatch,
  DivisionByZero,
  CapExceeded,
  BudgetExceeded,
  TagMismatch,
  NonIntegerResult,
  KOutOfRange,
  ZeroCoefficient,
  OddExtensionDegree,
  ConsistencyFailure,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library. The code is what callers dispatch on;
// the message carries the diagnostic payload (for NonIntegerResult, the ring
// value in text form).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qrsum
