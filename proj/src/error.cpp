#include "lacunary/error.hpp"

namespace lacunary {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ConstantTermZero: return "ConstantTermZero";
    case ErrorCode::TooFewTerms: return "TooFewTerms";
    case ErrorCode::DependentPair: return "DependentPair";
    case ErrorCode::HVanishes: return "HVanishes";
    case ErrorCode::VanishesOnCoset: return "VanishesOnCoset";
    case ErrorCode::NotTrinomial: return "NotTrinomial";
    case ErrorCode::EllNotPositive: return "EllNotPositive";
    case ErrorCode::NonIntegralValue: return "NonIntegralValue";
    case ErrorCode::DEqualsOne: return "DEqualsOne";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::NotResidue: return "NotResidue";
    case ErrorCode::EqualResidues: return "EqualResidues";
    case ErrorCode::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SoundnessViolation: return "SoundnessViolation";
  }
  return "Unknown";
}

}  // namespace lacunary
