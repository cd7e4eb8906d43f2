#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lacunary {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  NotMonic,
  DivisionByZero,
  FieldMismatch,
  NotADivisor,
  ZeroInput,
  FieldTooLarge,
  SyntaxError,
  ExponentOverflow,
  ZeroPolynomial,
  DegreeTooLarge,
  ConstantTermZero,
  TooFewTerms,
  DependentPair,
  HVanishes,
  VanishesOnCoset,
  NotTrinomial,
  EllNotPositive,
  NonIntegralValue,
  DEqualsOne,
  CongruenceViolated,
  NotResidue,
  EqualResidues,
  ConstructionMismatch,
  EnumerationTooLarge,
  InvalidArgument,
  SoundnessViolation,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also report the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lacunary
