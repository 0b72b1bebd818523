#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace a5 {

enum class ErrorKind {
  DivisionByZero,
  NotInQuadraticSubfield,
  FieldMismatch,
  ParseError,
  ZeroPolynomial,
  DuplicateAbscissa,
  InconsistentData,
  ConstantInner,
  IdentityFailed,
  DegreeMismatch,
  FixedPointsOutsideField,
  ParabolicElement,
  FactorMismatch,
  NotInLocus,
  DegenerateBranchValue,
  DuplicateBranchValue,
  NotEven,
  OrderTooLarge,
  DegreeTooSmall,
  NormalizationUndefined,
  DegenerateLeadingOrTrailing,
  SingularSystem,
  EliminationDegenerate,
  UnexpectedFactorStructure,
  RationalI3,
  SingularPoint,
  NotOnLocus,
  InvalidArgument,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind; the CLI maps it to JSON on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace a5
