#include "a5/common/error.hpp"

namespace a5 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInQuadraticSubfield: return "NotInQuadraticSubfield";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::InconsistentData: return "InconsistentData";
    case ErrorKind::ConstantInner: return "ConstantInner";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FixedPointsOutsideField: return "FixedPointsOutsideField";
    case ErrorKind::ParabolicElement: return "ParabolicElement";
    case ErrorKind::FactorMismatch: return "FactorMismatch";
    case ErrorKind::NotInLocus: return "NotInLocus";
    case ErrorKind::DegenerateBranchValue: return "DegenerateBranchValue";
    case ErrorKind::DuplicateBranchValue: return "DuplicateBranchValue";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NormalizationUndefined: return "NormalizationUndefined";
    case ErrorKind::DegenerateLeadingOrTrailing: return "DegenerateLeadingOrTrailing";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::EliminationDegenerate: return "EliminationDegenerate";
    case ErrorKind::UnexpectedFactorStructure: return "UnexpectedFactorStructure";
    case ErrorKind::RationalI3: return "RationalI3";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NotOnLocus: return "NotOnLocus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace a5
