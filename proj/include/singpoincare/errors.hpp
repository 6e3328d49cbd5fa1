#pragma once

#include <stdexcept>
#include <string>

namespace singpoincare {

enum class ErrorKind {
  SingularMatrix,
  Disconnected,
  BadReference,
  NotUnimodular,
  NotNegativeDefinite,
  SingularIntersectionMatrix,
  NotPrimitive,
  IndistinguishableBranches,
  TruncationTooShort,
  SeedNotGeneric,
  TruncationLoss,
  DimensionMismatch,
  UnknownComponent,
  UnknownBranch,
  NotWellDefined,
  NotDivisible,
  NotIntegral,
  HypothesisViolated,
  SeedsDisagree,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

// Failure of a mathematical precondition. The CLI maps these to exit code 2.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace singpoincare
