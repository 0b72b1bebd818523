#include "a5/exactfield/embed.hpp"

#include <numeric>
#include <vector>

#include "a5/common/error.hpp"
#include "a5/exactfield/integer.hpp"

namespace a5 {

AlgebraicNumber principal_sqrt(const Integer& D) {
  const auto r = sqrt(AlgebraicNumber(Rational(D)));
  if (!r) fail(ErrorKind::NotInQuadraticSubfield, "sqrt(" + D.get_str() + ") is not in Q(zeta_60)");
  const int s = D > 0 ? real_sign(*r) : imag_sign(*r);
  return s > 0 ? *r : -*r;
}

AlgebraicNumber to_algebraic(const QuadraticElement& q) {
  AlgebraicNumber r(q.a());
  if (!q.is_rational()) r += principal_sqrt(q.D()) * q.b();
  return r;
}

SubfieldValue embed_subfield(const AlgebraicNumber& x) {
  if (x.is_rational()) return x.to_rational();
  std::vector<AlgebraicNumber> conjugates{x};
  for (int k = 2; k < AlgebraicNumber::kConductor; ++k) {
    if (std::gcd(k, AlgebraicNumber::kConductor) != 1) continue;
    const AlgebraicNumber c = x.galois(k);
    bool seen = false;
    for (const auto& e : conjugates) seen = seen || e == c;
    if (!seen) conjugates.push_back(c);
    if (conjugates.size() > 2) fail(ErrorKind::NotInQuadraticSubfield, "element has degree > 2 over Q");
  }
  const Rational s = (conjugates[0] + conjugates[1]).to_rational();
  const Rational p = (conjugates[0] * conjugates[1]).to_rational();
  const Rational disc = s * s - Rational(4) * p;
  // sqrt(disc) = sqrt(num * den) / den = m sqrt(D) / den
  const SquarefreeSplit split = squarefree_split(disc.num() * disc.den());
  const Rational half_s = s * Rational(1, 2);
  const Rational b = Rational(split.square) / (Rational(2) * Rational(disc.den()));
  const QuadraticElement plus = QuadraticElement::from_squarefree(half_s, b, split.squarefree);
  if (to_algebraic(plus) == x) return plus;
  return plus.conj();
}

}  // namespace a5
