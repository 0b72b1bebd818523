#include "a5/exactfield/quadratic.hpp"

#include "a5/common/error.hpp"
#include "a5/exactfield/integer.hpp"

namespace a5 {

QuadraticElement::QuadraticElement(const Rational& a, const Rational& b, const Integer& D) : a_(a), b_(b) {
  if (D == 0) fail(ErrorKind::InvalidArgument, "quadratic field with D = 0");
  const SquarefreeSplit s = squarefree_split(D);
  D_ = s.squarefree;
  b_ *= Rational(s.square);
  fold();
}

QuadraticElement QuadraticElement::from_squarefree(const Rational& a, const Rational& b, const Integer& D) {
  if (D == 0) fail(ErrorKind::InvalidArgument, "quadratic field with D = 0");
  QuadraticElement r;
  r.a_ = a;
  r.b_ = b;
  r.D_ = D;
  r.fold();
  return r;
}

void QuadraticElement::fold() {
  if (D_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

const Integer& QuadraticElement::common_d(const QuadraticElement& o) const {
  if (o.b_.is_zero()) return D_;
  if (b_.is_zero()) return o.D_;
  if (D_ != o.D_)
    fail(ErrorKind::FieldMismatch, "Q(sqrt " + D_.get_str() + ") vs Q(sqrt " + o.D_.get_str() + ")");
  return D_;
}

QuadraticElement QuadraticElement::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in quadratic field");
  return from_squarefree(a_ / n, -b_ / n, D_);
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& o) {
  D_ = common_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& o) {
  D_ = common_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& o) {
  const Integer d = common_d(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  D_ = d;
  return *this;
}

bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
  return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const QuadraticElement& q) {
  if (q.is_rational()) return q.a().str();
  return q.a().str() + " + (" + q.b().str() + ")*sqrt(" + q.D().get_str() + ")";
}

}  // namespace a5
