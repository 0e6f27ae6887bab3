#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobsplit {

enum class ErrorCode {
  kCompositeModulus,
  kOverflow,
  kDivisionByZero,
  kFieldMismatch,
  kZeroPolynomial,
  kNotMonic,
  kDegreeNotDivisible,
  kOddDegree,
  kSymmetryViolation,
  kRootBoundViolation,
  kNotPrimePower,
  kZeroConstantTerm,
  kBadAuxPrime,
  kInconsistentSignature,
  kDimensionMismatch,
  kBudgetExceeded,
  kInvalidArgument,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this type; callers branch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace frobsplit
