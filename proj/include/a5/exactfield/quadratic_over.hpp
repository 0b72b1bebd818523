#pragma once

#include <string>

#include "a5/common/error.hpp"
#include "a5/exactfield/field.hpp"

namespace a5 {

/// a + b sqrt(D) over a base field F, for an integer D that is not a square in F.
template <FieldElement F>
class QuadraticOver {
 public:
  QuadraticOver() = default;
  QuadraticOver(int v) : a_(Rational(v)) {}
  QuadraticOver(const Rational& v) : a_(v) {}
  QuadraticOver(const F& a) : a_(a) {}
  QuadraticOver(const F& a, const F& b, const Integer& D) : a_(a), b_(b), D_(D) {}

  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const Integer& D() const { return D_; }

  QuadraticOver inverse() const {
    const F n = a_ * a_ - b_ * b_ * F(Rational(D_));
    if (is_zero(n)) fail(ErrorKind::DivisionByZero, "inverse of zero in quadratic extension");
    return {a_ / n, -b_ / n, D_};
  }

  friend QuadraticOver operator+(const QuadraticOver& x, const QuadraticOver& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common(x, y)};
  }
  friend QuadraticOver operator-(const QuadraticOver& x, const QuadraticOver& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, common(x, y)};
  }
  friend QuadraticOver operator*(const QuadraticOver& x, const QuadraticOver& y) {
    const Integer d = common(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * F(Rational(d)), x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  friend QuadraticOver operator/(const QuadraticOver& x, const QuadraticOver& y) { return x * y.inverse(); }
  friend QuadraticOver operator-(const QuadraticOver& x) { return {-x.a_, -x.b_, x.D_}; }
  friend bool operator==(const QuadraticOver& x, const QuadraticOver& y) {
    if (is_zero(x.b_) && is_zero(y.b_)) return x.a_ == y.a_;
    return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  static Integer common(const QuadraticOver& x, const QuadraticOver& y) {
    if (is_zero(y.b_)) return x.D_;
    if (is_zero(x.b_)) return y.D_;
    if (x.D_ != y.D_) fail(ErrorKind::FieldMismatch, "quadratic extensions with different D");
    return x.D_;
  }
  F a_{Rational(0)}, b_{Rational(0)};
  Integer D_{1};
};

template <FieldElement F>
bool is_zero(const QuadraticOver<F>& q) {
  return is_zero(q.a()) && is_zero(q.b());
}

template <FieldElement F>
std::string to_string(const QuadraticOver<F>& q) {
  return to_string(q.a()) + " + (" + to_string(q.b()) + ")*sqrt(" + q.D().get_str() + ")";
}

}  // namespace a5
