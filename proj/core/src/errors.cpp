#include "frobsplit/errors.hpp"

namespace frobsplit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCompositeModulus: return "CompositeModulus";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kDegreeNotDivisible: return "DegreeNotDivisible";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kSymmetryViolation: return "SymmetryViolation";
    case ErrorCode::kRootBoundViolation: return "RootBoundViolation";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::kBadAuxPrime: return "BadAuxPrime";
    case ErrorCode::kInconsistentSignature: return "InconsistentSignature";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace frobsplit
