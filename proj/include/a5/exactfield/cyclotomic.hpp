#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "a5/exactfield/rational.hpp"

namespace a5 {

/// Element of Q(zeta) with zeta = exp(2 pi i / 60), stored as sum c_j zeta^j (j < 16) reduced mod Phi_60.
class AlgebraicNumber {
 public:
  static constexpr int kDegree = 16;
  static constexpr int kConductor = 60;

  AlgebraicNumber() = default;
  AlgebraicNumber(int v) : AlgebraicNumber(Rational(v)) {}
  AlgebraicNumber(const Rational& q);

  static AlgebraicNumber from_coefficients(const std::array<Rational, kDegree>& c);
  static AlgebraicNumber zeta_power(long k);
  static AlgebraicNumber i() { return zeta_power(15); }
  static AlgebraicNumber epsilon5() { return zeta_power(12); }
  static AlgebraicNumber epsilon3() { return zeta_power(40); }
  /// (-1 + sqrt 5) / 2.
  static AlgebraicNumber omega() { return zeta_power(12) + zeta_power(48); }
  static AlgebraicNumber sqrt5() { return omega() * Rational(2) + Rational(1); }
  static AlgebraicNumber sqrt3() { return zeta_power(5) + zeta_power(55); }

  Rational coefficient(int j) const;
  std::array<Rational, kDegree> coefficients() const;

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Rational value; throws InvalidArgument unless is_rational().
  Rational to_rational() const;

  AlgebraicNumber inverse() const;
  /// The automorphism zeta -> zeta^k, gcd(k, 60) = 1.
  AlgebraicNumber galois(int k) const;
  /// Complex conjugation.
  AlgebraicNumber conj() const { return galois(kConductor - 1); }

  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }
  AlgebraicNumber& operator*=(const Rational& q);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const Rational& q) { return a *= q; }
  friend AlgebraicNumber operator*(const Rational& q, AlgebraicNumber a) { return a *= q; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Value under zeta -> exp(2 pi i / 60).
  std::complex<long double> approximate() const;

 private:
  void normalize();
  std::array<Integer, kDegree> num_{};
  Integer den_{1};
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
std::string to_string(const AlgebraicNumber& a);
AlgebraicNumber pow(const AlgebraicNumber& a, long e);

/// Square root inside Q(zeta_60) when one exists.
std::optional<AlgebraicNumber> sqrt(const AlgebraicNumber& a);

/// Exact sign of the imaginary (resp. real) part under the canonical embedding.
int imag_sign(const AlgebraicNumber& a);
int real_sign(const AlgebraicNumber& a);

/// Multiplicative order when a is a root of unity, else 0.
int root_of_unity_order(const AlgebraicNumber& a);

}  // namespace a5
