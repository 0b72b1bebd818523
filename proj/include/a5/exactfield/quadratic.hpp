#pragma once

#include <string>

#include "a5/exactfield/rational.hpp"

namespace a5 {

/// a + b*sqrt(D) with D squarefree. D = 1 marks a plain rational (b = 0);
/// elements with b = 0 combine with any D.
class QuadraticElement {
 public:
  QuadraticElement() = default;
  QuadraticElement(int v) : a_(v) {}
  QuadraticElement(const Rational& a) : a_(a) {}
  /// D is reduced to its squarefree part, the square factor moving into b.
  QuadraticElement(const Rational& a, const Rational& b, const Integer& D);
  /// Construct from an already squarefree D without factoring.
  static QuadraticElement from_squarefree(const Rational& a, const Rational& b, const Integer& D);
  /// sqrt(n) for any nonzero integer n.
  static QuadraticElement sqrt_of(const Integer& n) { return {Rational(0), Rational(1), n}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& D() const { return D_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  QuadraticElement conj() const { return from_squarefree(a_, -b_, D_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(D_); }
  QuadraticElement inverse() const;

  QuadraticElement& operator+=(const QuadraticElement& o);
  QuadraticElement& operator-=(const QuadraticElement& o);
  QuadraticElement& operator*=(const QuadraticElement& o);
  QuadraticElement& operator/=(const QuadraticElement& o) { return *this *= o.inverse(); }

  friend QuadraticElement operator+(QuadraticElement x, const QuadraticElement& y) { return x += y; }
  friend QuadraticElement operator-(QuadraticElement x, const QuadraticElement& y) { return x -= y; }
  friend QuadraticElement operator*(QuadraticElement x, const QuadraticElement& y) { return x *= y; }
  friend QuadraticElement operator/(QuadraticElement x, const QuadraticElement& y) { return x /= y; }
  friend QuadraticElement operator-(const QuadraticElement& x) { return from_squarefree(-x.a_, -x.b_, x.D_); }
  friend bool operator==(const QuadraticElement& x, const QuadraticElement& y);

 private:
  const Integer& common_d(const QuadraticElement& o) const;
  void fold();
  Rational a_, b_;
  Integer D_{1};
};

inline bool is_zero(const QuadraticElement& q) { return q.is_zero(); }
std::string to_string(const QuadraticElement& q);

}  // namespace a5
