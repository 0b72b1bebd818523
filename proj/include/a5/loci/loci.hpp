#pragma once

#include <array>
#include <optional>
#include <vector>

#include "a5/exactfield/quadratic.hpp"
#include "a5/families/families.hpp"
#include "a5/invariants/dihedral.hpp"
#include "a5/invariants/transvectant.hpp"
#include "a5/polyring/bivariate.hpp"

namespace a5 {

using QPoly = Poly<Rational>;

/// Smallest genus of the case with one free branch value.
int one_dimensional_genus(int case_no);

/// Classical invariants of the x5-model family as polynomials in lambda.
struct InvariantPolys {
  QPoly I2, I4, I6, I6star;
};
InvariantPolys invariant_polys(int case_no, int samples = 25);

/// Classical invariants of the x5-model curve of the case at one rational lambda.
InvariantSet<Rational> invariants_at(int case_no, const Rational& lambda);

struct LocusCurve {
  int case_no = 0;
  int genus = 0;
  InvariantPolys I;
  QFunction i1, i2, i3;          // in lambda
  Bivariate<Rational> F;         // F(i1, i2) = 0, integer coefficients, content 1
  std::array<Rational, 3> kappa{Rational(1), Rational(1), Rational(1)};
};
LocusCurve build_locus(int case_no, int samples = 25);

/// Ratios reference/computed at lambda0, with their constancy over further samples.
struct KappaFit {
  Rational kappa;
  bool constant = false;
};
KappaFit fit_kappa(const QFunction& computed, const QFunction& reference, const std::vector<Rational>& lambdas);

/// F(X/k1, Y/k2), made primitive: the locus in the rescaled coordinates (k1 i1, k2 i2).
Bivariate<Rational> rescale_locus(const Bivariate<Rational>& f, const Rational& k1, const Rational& k2);

enum class FiberKind { Collision, ZeroLocus, InfinityLocus };
std::string to_string(FiberKind k);

struct SingularFiber {
  FiberKind kind = FiberKind::Collision;
  QPoly q;                  // primitive integer quadratic in lambda
  Integer D;                // discriminant of q
  Integer d_table;          // squarefree part of D
  bool certified = true;    // squarefree part backed by a complete factorization
};
std::vector<SingularFiber> singular_fibers(const LocusCurve& l);

/// Both roots of q give the same (i1, i2), checked in Q(sqrt D).
bool fiber_collides(const SingularFiber& fiber, const LocusCurve& l);

/// Value of the absolute invariant used for the field-of-moduli test at a root of q:
/// i3 where I2 != 0, and I6star / I6 on the I2 = 0 fiber.
QuadraticElement moduli_invariant_at(const SingularFiber& fiber, const LocusCurve& l);

/// Squarefree d with Q(sqrt d) the field generated by the invariant; RationalI3 when it is rational.
Integer field_of_moduli_at(const SingularFiber& fiber, const LocusCurve& l);

/// The unique lambda with (i1(lambda), i2(lambda)) = (a, b).
Rational solve_lambda(const Rational& a, const Rational& b, const LocusCurve& l);

/// Dihedral invariants of the x2-model curve of the case at rational branch values.
DihedralInvariants<Rational> dihedral_invariants_x2(int g, const std::vector<Rational>& lambdas);
/// Dihedral invariants of the x2-model one-parameter curve at a root of the fiber quadratic.
DihedralInvariants<QuadraticElement> dihedral_invariants_at_fiber(const SingularFiber& fiber, const LocusCurve& l);

/// y^2 = u1 x^(2g+2) + u1 x^(2g) + ... + u_g x^2 + 2, or x times the analogous even form.
template <FieldElement F>
CurveModel<F> rational_model(const DihedralInvariants<F>& u, AutGroup group) {
  const int d = u.d;
  const int g = group == AutGroup::Z2xA5 ? d - 1 : d;
  const GroupRelation rel = check_group_relation(u, g);
  if (rel == GroupRelation::Neither || (rel == GroupRelation::Z2xA5) != (group == AutGroup::Z2xA5))
    fail(ErrorKind::NotInLocus, "dihedral invariants do not satisfy the " + to_string(group) + " relation");
  const int shift = group == AutGroup::Z2xA5 ? 0 : 1;
  std::vector<F> c(2 * d + 1 + shift, F(Rational(0)));
  c[shift] = F(Rational(2));
  for (int j = 1; j < d; ++j) c[2 * j + shift] = u(d - j);
  c[2 * d + shift] = u(1);
  CurveModel<F> m;
  m.f = Poly<F>(std::move(c));
  m.genus = g;
  m.model = Model::X;
  m.cs = classify_genus(g);
  return m;
}

}  // namespace a5
