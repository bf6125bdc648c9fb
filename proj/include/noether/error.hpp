#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noether {

enum class ErrorCode {
  InvalidParameter,
  NotAGroup,
  MixedGroups,
  TooLarge,
  ConductorMismatch,
  ZeroDenominator,
  DimMismatch,
  ModulusMismatch,
  NotMonomial,
  NotAnEigenvector,
  NotClosed,
  ClosureTooLarge,
  NotScalar,
  NonIntegralConjugate,
  ShapeViolation,
  DimUnsupported,
  ScriptRangeError,
  ParseError,
  InvalidInput,
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

}  // namespace noether
