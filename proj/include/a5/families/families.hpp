#pragma once

#include <string>
#include <vector>

#include "a5/decomp/decomp.hpp"
#include "a5/exactfield/gaussian.hpp"
#include "a5/polyring/poly.hpp"

namespace a5 {

enum class AutGroup { Z2xA5, SL2_5 };
enum class Model { X, X2, X5 };
enum class Multiplier { T, R, S };

std::string to_string(AutGroup g);
std::string to_string(Model m);
std::string to_string(Multiplier m);
Model parse_model(const std::string& s);

struct CaseDescriptor {
  int case_no = 0;
  AutGroup group = AutGroup::Z2xA5;
  int delta = 0;
  std::vector<Multiplier> multipliers;
  int genus = 0;
};

/// Genus offset o with delta = (g - o) / 30: -1, 5, 15, 9, 14, 20, 24, 30 for cases 1..8.
int case_offset(int case_no);
CaseDescriptor case_descriptor(int case_no, int delta);
/// NotInLocus when no case gives a nonnegative integral delta.
CaseDescriptor classify_genus(int g);

template <FieldElement F>
struct CurveModel {
  Poly<F> f;
  int genus = 0;
  Model model = Model::X;
  CaseDescriptor cs;
  std::vector<F> params;
};

/// Psi - lambda Upsilon for phi = -R^3 / S^5.
Poly<Rational> lambda_factor_x5(const Rational& lambda);
/// Psi - lambda Upsilon for phi1 = 64 Rbar^3 / Sbar^5.
GaussianPoly lambda_factor_x2(const Gaussian& lambda);

CurveModel<Rational> curve_equation_x5(int g, const std::vector<Rational>& lambdas);
CurveModel<Gaussian> curve_equation_x2(int g, const std::vector<Gaussian>& lambdas);

/// Number of Weierstrass points: distinct roots of f, plus one when deg f is odd.
template <FieldElement F>
int weierstrass_count(const Poly<F>& f) {
  const int common = gcd(f, f.derivative()).degree();
  return f.degree() - common + (f.degree() % 2);
}

/// b_j = coefficient of x^(2j) in f, or in f/x when f is odd.
template <FieldElement F>
std::vector<F> even_model(const Poly<F>& f) {
  Poly<F> g = f;
  if (g.degree() >= 0 && is_zero(g.coeff(0))) {
    std::vector<F> c(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly<F>(std::move(c));
  }
  std::vector<F> b;
  for (int k = 0; k <= g.degree(); ++k) {
    if (k % 2) {
      if (!is_zero(g.coeff(k))) fail(ErrorKind::NotEven, "odd-degree term x^" + std::to_string(k));
    } else {
      b.push_back(g.coeff(k));
    }
  }
  return b;
}

/// Y^d f(X/Y) evaluated at (X, Y) = (a x + b, c x + d) for the matrix m.
template <FieldElement F>
Poly<F> substitute_homogeneous(const Poly<F>& f, int degree, const F& a, const F& b, const F& c, const F& d) {
  const Poly<F> p{b, a}, q{d, c};
  Poly<F> acc(f.coeff(degree));
  Poly<F> qpow(F(Rational(1)));
  for (int k = degree - 1; k >= 0; --k) {
    qpow *= q;
    acc = acc * p + qpow * f.coeff(k);
  }
  return acc;
}

}  // namespace a5
