#pragma once

#include <variant>

#include "a5/exactfield/cyclotomic.hpp"
#include "a5/exactfield/quadratic.hpp"

namespace a5 {

using SubfieldValue = std::variant<Rational, QuadraticElement>;

/// Rational or quadratic representation of x; NotInQuadraticSubfield when [Q(x):Q] > 2.
SubfieldValue embed_subfield(const AlgebraicNumber& x);

/// sqrt(D) inside Q(zeta_60) for D in {-1, +-3, +-5, +-15}: positive, or positive imaginary part.
AlgebraicNumber principal_sqrt(const Integer& D);

/// Inverse of embed_subfield on elements whose D lies in Q(zeta_60).
AlgebraicNumber to_algebraic(const QuadraticElement& q);

}  // namespace a5
