#include "a5/exactfield/gaussian.hpp"

#include "a5/common/error.hpp"

namespace a5 {

Gaussian Gaussian::from_algebraic(const AlgebraicNumber& a) {
  // Q(i) is the fixed field of zeta -> zeta^k for k = 1 mod 4.
  for (int k : {13, 17, 29, 37, 41, 49, 53})
    if (!(a.galois(k) == a)) fail(ErrorKind::InvalidArgument, "element is not in Q(i)");
  const AlgebraicNumber i = AlgebraicNumber::i();
  const AlgebraicNumber re = (a + a.conj()) * Rational(1, 2);
  const AlgebraicNumber im = (a - a.conj()) * i * Rational(-1, 2);
  return {re.to_rational(), im.to_rational()};
}

Gaussian Gaussian::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(i)");
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  const Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  return *this;
}

std::string to_string(const Gaussian& g) {
  if (g.im().is_zero()) return g.re().str();
  if (g.re().is_zero()) return g.im().str() + "*i";
  return g.re().str() + (g.im().sign() > 0 ? "+" : "") + g.im().str() + "*i";
}

}  // namespace a5
