#pragma once

#include <string>

#include "a5/exactfield/cyclotomic.hpp"
#include "a5/exactfield/rational.hpp"

namespace a5 {

/// Element re + im*i of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int v) : re_(v) {}
  Gaussian(const Rational& re) : re_(re) {}
  Gaussian(const Rational& re, const Rational& im) : re_(re), im_(im) {}
  static Gaussian i() { return {Rational(0), Rational(1)}; }

  /// Throws InvalidArgument when a is outside Q(i).
  static Gaussian from_algebraic(const AlgebraicNumber& a);
  AlgebraicNumber to_algebraic() const { return AlgebraicNumber(re_) + AlgebraicNumber::i() * im_; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

 private:
  Rational re_, im_;
};

inline bool is_zero(const Gaussian& g) { return g.is_zero(); }
std::string to_string(const Gaussian& g);

}  // namespace a5
