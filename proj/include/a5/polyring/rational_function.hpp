#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "a5/polyring/poly.hpp"

namespace a5 {

/// Reduced quotient num/den with den monic.
template <FieldElement F>
class RationalFunction {
 public:
  struct Coprime {};

  RationalFunction() : den_(F(Rational(1))) {}
  RationalFunction(const F& c) : num_(c), den_(F(Rational(1))) {}
  RationalFunction(Poly<F> num) : num_(std::move(num)), den_(F(Rational(1))) {}
  RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    const Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    make_monic();
  }
  /// Caller guarantees gcd(num, den) = 1; only the monic normalization is applied.
  RationalFunction(Poly<F> num, Poly<F> den, Coprime) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    make_monic();
  }

  static RationalFunction identity() { return RationalFunction(Poly<F>::x()); }
  /// (a x + b) / (c x + d).
  static RationalFunction moebius(const F& a, const F& b, const F& c, const F& d) {
    if (detail::field_is_zero(a * d - b * c)) fail(ErrorKind::InvalidArgument, "singular Moebius matrix");
    return RationalFunction(Poly<F>{b, a}, Poly<F>{d, c}, Coprime{});
  }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  bool is_zero() const { return num_.is_zero(); }

  F operator()(const F& t) const {
    const F d = den_(t);
    if (detail::field_is_zero(d)) fail(ErrorKind::DivisionByZero, "evaluation at a pole");
    return num_(t) / d;
  }

  /// this o inner.
  RationalFunction compose(const RationalFunction& inner) const {
    if (inner.is_constant()) fail(ErrorKind::ConstantInner, "composition with a constant inner function");
    const int e = degree();
    const Poly<F>& p = inner.num();
    const Poly<F>& q = inner.den();
    // Homogeneous Horner: H(p, q) = sum_k c_k p^k q^(e-k).
    auto homogenize = [&](const Poly<F>& c) {
      Poly<F> acc(c.coeff(e));
      Poly<F> qpow(F(Rational(1)));
      for (int k = e - 1; k >= 0; --k) {
        qpow *= q;
        acc = acc * p + qpow * c.coeff(k);
      }
      return acc;
    };
    // Reduced inputs give coprime homogenized outputs: a common root would be a common zero of
    // the binary forms of num and den at [p(x) : q(x)].
    return RationalFunction(homogenize(num_), homogenize(den_), Coprime{});
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void make_monic() {
    if (num_.is_zero()) {
      den_ = Poly<F>(F(Rational(1)));
      return;
    }
    const F inv = F(Rational(1)) / den_.leading();
    if (!(inv == F(Rational(1)))) {
      num_ *= inv;
      den_ *= inv;
    }
  }
  Poly<F> num_, den_;
};

template <FieldElement F>
RationalFunction<F> compose_rational(const RationalFunction<F>& f, const RationalFunction<F>& g) {
  return f.compose(g);
}

template <class G, class F>
RationalFunction<G> rational_function_cast(const RationalFunction<F>& f) {
  return RationalFunction<G>(poly_cast<G>(f.num()), poly_cast<G>(f.den()), typename RationalFunction<G>::Coprime{});
}

template <FieldElement F>
std::string to_string(const RationalFunction<F>& f, const std::string& var = "x") {
  if (f.den().degree() == 0) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

}  // namespace a5
