#include "singpoincare/errors.hpp"

namespace singpoincare {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadReference: return "BadReference";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::SingularIntersectionMatrix: return "SingularIntersectionMatrix";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::IndistinguishableBranches: return "IndistinguishableBranches";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::SeedNotGeneric: return "SeedNotGeneric";
    case ErrorKind::TruncationLoss: return "TruncationLoss";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::UnknownBranch: return "UnknownBranch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::SeedsDisagree: return "SeedsDisagree";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

MathError::MathError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace singpoincare
