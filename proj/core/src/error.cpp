#include "npcurve/error.hpp"

namespace npcurve {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::CharacteristicTooLarge: return "CharacteristicTooLarge";
    case ErrorCode::ZeroExtensionDegree: return "ZeroExtensionDegree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotQuadraticExtension: return "NotQuadraticExtension";
    case ErrorCode::BadElementExpression: return "BadElementExpression";
    case ErrorCode::PoleNotRational: return "PoleNotRational";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::DegenerateLambda: return "DegenerateLambda";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::EvenDegreeModel: return "EvenDegreeModel";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::WildPoleOrder: return "WildPoleOrder";
    case ErrorCode::ReducibleCurve: return "ReducibleCurve";
    case ErrorCode::UnsupportedLinearized: return "UnsupportedLinearized";
    case ErrorCode::WeilBoundViolation: return "WeilBoundViolation";
    case ErrorCode::NonIntegralNewtonStep: return "NonIntegralNewtonStep";
    case ErrorCode::ZetaInconsistency: return "ZetaInconsistency";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::NonIntegralBreakPoint: return "NonIntegralBreakPoint";
    case ErrorCode::AsymmetricSlopes: return "AsymmetricSlopes";
    case ErrorCode::InvalidSlopeData: return "InvalidSlopeData";
    case ErrorCode::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorCode::InvalidEOType: return "InvalidEOType";
    case ErrorCode::NotTwoSlopeShape: return "NotTwoSlopeShape";
    case ErrorCode::InvalidPRank: return "InvalidPRank";
    case ErrorCode::BadDigits: return "BadDigits";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::NegativePRank: return "NegativePRank";
    case ErrorCode::NonSupersingularFactor: return "NonSupersingularFactor";
    case ErrorCode::InvalidCurveData: return "InvalidCurveData";
  }
  return "UnknownError";
}

}  // namespace npcurve
