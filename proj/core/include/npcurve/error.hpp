#pragma once

#include <stdexcept>
#include <string>

namespace npcurve {

// Math-domain failures carry a stable code so callers (and the CLI, which
// prints the code on stderr and exits 1) can tell rejection classes apart.
enum class ErrorCode {
  NonPrimeCharacteristic,
  CharacteristicTooLarge,
  ZeroExtensionDegree,
  CapExceeded,
  FieldMismatch,
  NotInvertible,
  NotQuadraticExtension,
  BadElementExpression,
  PoleNotRational,
  NotPolynomial,
  DivisionByZeroFunction,
  DegenerateLambda,
  NotSquarefree,
  EvenDegreeModel,
  EvenCharacteristic,
  WildPoleOrder,
  ReducibleCurve,
  UnsupportedLinearized,
  WeilBoundViolation,
  NonIntegralNewtonStep,
  ZetaInconsistency,
  NotElliptic,
  NonIntegralBreakPoint,
  AsymmetricSlopes,
  InvalidSlopeData,
  GenusOutOfRange,
  InvalidEOType,
  NotTwoSlopeShape,
  InvalidPRank,
  BadDigits,
  IdentityFailure,
  NegativePRank,
  NonSupersingularFactor,
  InvalidCurveData,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace npcurve
