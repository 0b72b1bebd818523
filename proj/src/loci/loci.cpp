#include "a5/loci/loci.hpp"

#include "a5/common/error.hpp"
#include "a5/common/parallel.hpp"
#include "a5/exactfield/integer.hpp"
#include "a5/exactfield/quadratic_over.hpp"

namespace a5 {

int one_dimensional_genus(int case_no) { return 30 + case_offset(case_no); }

InvariantSet<Rational> invariants_at(int case_no, const Rational& lambda) {
  const int g = one_dimensional_genus(case_no);
  const CurveModel<Rational> c = curve_equation_x5(g, {lambda});
  return classical_invariants(BinaryForm<Rational>::from_poly(c.f, 2 * g + 2));
}

InvariantPolys invariant_polys(int case_no, int samples) {
  if (samples < 8) fail(ErrorKind::InvalidArgument, "at least 8 samples are needed for degree-6 invariants");
  const auto sets = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t k) {
    return invariants_at(case_no, Rational(static_cast<long>(k) + 2));
  });
  std::vector<std::pair<Rational, Rational>> p2, p4, p6, p6s;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const Rational l(static_cast<long>(k) + 2);
    p2.emplace_back(l, sets[k].I2);
    p4.emplace_back(l, sets[k].I4);
    p6.emplace_back(l, sets[k].I6);
    p6s.emplace_back(l, *sets[k].I6star);
  }
  return {interpolate(p2, 2), interpolate(p4, 4), interpolate(p6, 6), interpolate(p6s, 6)};
}

namespace {

int map_degree(const QFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

// Abscissae t (from 1 upward, skipping those that drop the lambda-degree of num - t*den).
std::vector<Rational> good_samples(const QFunction& f, std::size_t count) {
  std::vector<Rational> out;
  const int e = map_degree(f);
  for (long t = 1; out.size() < count; ++t) {
    const QPoly p = f.num() - f.den() * Rational(t);
    if (p.degree() == e) out.push_back(Rational(t));
  }
  return out;
}

}  // namespace

LocusCurve build_locus(int case_no, int samples) {
  LocusCurve l;
  l.case_no = case_no;
  l.genus = one_dimensional_genus(case_no);
  l.I = invariant_polys(case_no, samples);
  const QPoly i2sq = l.I.I2 * l.I.I2, i2cu = i2sq * l.I.I2;
  l.i1 = QFunction(l.I.I4, i2sq);
  l.i2 = QFunction(l.I.I6, i2cu);
  l.i3 = QFunction(l.I.I6star, i2cu);
  const int e1 = map_degree(l.i1), e2 = map_degree(l.i2);
  const auto xs = good_samples(l.i1, e2 + 2);
  const auto ys = good_samples(l.i2, e1 + 2);
  const auto res = [&](const Rational& x, const Rational& y) {
    return resultant(l.i1.num() - l.i1.den() * x, l.i2.num() - l.i2.den() * y);
  };
  const Bivariate<Rational> raw = interpolate_bivariate<Rational>(res, e2, e1, xs, ys);
  if (raw.is_zero()) fail(ErrorKind::EliminationDegenerate, "eliminant vanishes identically");
  l.F = primitive_part(raw);
  return l;
}

KappaFit fit_kappa(const QFunction& computed, const QFunction& reference, const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) fail(ErrorKind::InvalidArgument, "need at least one sample");
  const Rational c0 = computed(lambdas[0]);
  if (c0.is_zero()) fail(ErrorKind::DivisionByZero, "computed invariant vanishes at the first sample");
  KappaFit fit{reference(lambdas[0]) / c0, true};
  for (std::size_t k = 1; k < lambdas.size(); ++k)
    fit.constant = fit.constant && reference(lambdas[k]) == fit.kappa * computed(lambdas[k]);
  return fit;
}

Bivariate<Rational> rescale_locus(const Bivariate<Rational>& f, const Rational& k1, const Rational& k2) {
  auto c = f.rows();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      c[i][j] = c[i][j] / (pow(k1, static_cast<long>(i)) * pow(k2, static_cast<long>(j)));
  return primitive_part(Bivariate<Rational>(std::move(c)));
}

std::string to_string(FiberKind k) {
  switch (k) {
    case FiberKind::Collision: return "collision";
    case FiberKind::ZeroLocus: return "zero_locus";
    case FiberKind::InfinityLocus: return "infinity_locus";
  }
  return "collision";
}

namespace {

QPoly strip_factor(QPoly p, const QPoly& q) {
  while (p.degree() >= q.degree()) {
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero()) break;
    p = std::move(quo);
  }
  return p;
}

SingularFiber make_fiber(FiberKind kind, const QPoly& q) {
  if (q.degree() != 2)
    fail(ErrorKind::UnexpectedFactorStructure,
         to_string(kind) + " factor has degree " + std::to_string(q.degree()) + ", expected a quadratic");
  SingularFiber f;
  f.kind = kind;
  f.q = primitive_part(q);
  f.D = discriminant_quadratic(f.q).num();
  const SquarefreeSplit s = squarefree_split(f.D);
  f.d_table = s.squarefree;
  f.certified = s.certified;
  return f;
}

// (n(l0) d(mu) - n(mu) d(l0)) / (mu - l0) as a polynomial in mu.
QPoly collision_slice(const QFunction& f, const Rational& l0) {
  const QPoly a = f.den() * f.num()(l0) - f.num() * f.den()(l0);
  return exact_quotient(a, QPoly{-l0, Rational(1)});
}

// The two roots of the fiber quadratic in Q(sqrt d).
std::array<QuadraticElement, 2> roots(const SingularFiber& fiber) {
  const Rational a = fiber.q.coeff(2), b = fiber.q.coeff(1);
  const Rational m = exact_sqrt(Rational(fiber.D) / Rational(fiber.d_table));
  const Rational two_a = a * Rational(2);
  const QuadraticElement plus = QuadraticElement::from_squarefree(-b / two_a, m / two_a, fiber.d_table);
  return {plus, plus.conj()};
}

QuadraticElement eval(const QPoly& p, const QuadraticElement& x) { return p.evaluate_in(x); }

}  // namespace

std::vector<SingularFiber> singular_fibers(const LocusCurve& l) {
  const QPoly zero = squarefree_part(gcd(l.i1.num(), l.i2.num()));
  const QPoly inf = squarefree_part(gcd(l.i1.den(), l.i2.den()));
  const int e1 = map_degree(l.i1) - 1, e2 = map_degree(l.i2) - 1;
  const int bound = 2 * e1 * e2;
  std::vector<Rational> lams;
  for (long t = 1; static_cast<int>(lams.size()) < bound + 3; ++t) {
    const Rational l0(t);
    if (collision_slice(l.i1, l0).degree() == e1 && collision_slice(l.i2, l0).degree() == e2) lams.push_back(l0);
  }
  const auto values = parallel_map(lams.size(), [&](std::size_t k) {
    return resultant(collision_slice(l.i1, lams[k]), collision_slice(l.i2, lams[k]));
  });
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t k = 0; k < lams.size(); ++k) pts.emplace_back(lams[k], values[k]);
  QPoly r = interpolate(pts, bound);
  if (r.is_zero()) fail(ErrorKind::EliminationDegenerate, "collision resultant vanishes identically");
  r = strip_factor(strip_factor(r, zero), inf);
  const QPoly coll = squarefree_part(r);
  return {make_fiber(FiberKind::Collision, coll), make_fiber(FiberKind::ZeroLocus, zero),
          make_fiber(FiberKind::InfinityLocus, inf)};
}

bool fiber_collides(const SingularFiber& fiber, const LocusCurve& l) {
  const auto rs = roots(fiber);
  if (fiber.kind == FiberKind::InfinityLocus) {
    for (const auto& r : rs)
      if (!eval(l.i1.den(), r).is_zero() || !eval(l.i2.den(), r).is_zero()) return false;
    return true;
  }
  std::array<std::array<QuadraticElement, 2>, 2> v;
  for (int k = 0; k < 2; ++k) {
    v[k][0] = eval(l.i1.num(), rs[k]) / eval(l.i1.den(), rs[k]);
    v[k][1] = eval(l.i2.num(), rs[k]) / eval(l.i2.den(), rs[k]);
  }
  return v[0][0] == v[1][0] && v[0][1] == v[1][1];
}

QuadraticElement moduli_invariant_at(const SingularFiber& fiber, const LocusCurve& l) {
  const QuadraticElement r = roots(fiber)[0];
  const QuadraticElement num = eval(l.I.I6star, r);
  if (fiber.kind == FiberKind::InfinityLocus) return num / eval(l.I.I6, r);
  const QuadraticElement i2 = eval(l.I.I2, r);
  return num / (i2 * i2 * i2);
}

Integer field_of_moduli_at(const SingularFiber& fiber, const LocusCurve& l) {
  if (is_perfect_square(fiber.D)) fail(ErrorKind::InvalidArgument, "fiber quadratic is reducible over Q");
  const QuadraticElement v = moduli_invariant_at(fiber, l);
  if (v.is_rational())
    fail(ErrorKind::RationalI3, "invariant is rational at the " + to_string(fiber.kind) + " fiber");
  return fiber.d_table;
}

Rational solve_lambda(const Rational& a, const Rational& b, const LocusCurve& l) {
  if (!l.F(a, b).is_zero()) fail(ErrorKind::NotOnLocus, "(" + a.str() + ", " + b.str() + ") is not on the locus");
  const QPoly g = gcd(l.i1.num() - l.i1.den() * a, l.i2.num() - l.i2.den() * b);
  if (g.degree() <= 0) fail(ErrorKind::NotOnLocus, "no lambda maps to (" + a.str() + ", " + b.str() + ")");
  if (g.degree() >= 2)
    fail(ErrorKind::SingularPoint, "point has " + std::to_string(g.degree()) + " preimages; use the fiber path");
  return -g.coeff(0) / g.coeff(1);
}

DihedralInvariants<Rational> dihedral_invariants_x2(int g, const std::vector<Rational>& lambdas) {
  std::vector<Gaussian> gl(lambdas.begin(), lambdas.end());
  const CurveModel<Gaussian> c = curve_equation_x2(g, gl);
  const DihedralInvariants<Gaussian> u = dihedral_invariants(even_model(c.f));
  DihedralInvariants<Rational> out{u.d, {}};
  for (const auto& v : u.u) {
    if (!v.im().is_zero()) fail(ErrorKind::InconsistentData, "dihedral invariant is not rational");
    out.u.push_back(v.re());
  }
  return out;
}

DihedralInvariants<QuadraticElement> dihedral_invariants_at_fiber(const SingularFiber& fiber, const LocusCurve& l) {
  using K = QuadraticOver<Gaussian>;
  const CaseDescriptor cs = classify_genus(l.genus);
  const auto affine = even_coefficients_in_s(cs);
  const QuadraticElement r = roots(fiber)[0];
  const K lambda(Gaussian(r.a()), Gaussian(r.b()), r.D());
  std::vector<K> b;
  for (const auto& row : affine) b.push_back(K(row[0]) + K(row[1]) * lambda);
  const DihedralInvariants<K> u = dihedral_invariants(b);
  DihedralInvariants<QuadraticElement> out{u.d, {}};
  for (const auto& v : u.u) {
    if (!v.a().im().is_zero() || !v.b().im().is_zero())
      fail(ErrorKind::InconsistentData, "dihedral invariant leaves Q(sqrt d)");
    out.u.push_back(QuadraticElement::from_squarefree(v.a().re(), v.b().re(), v.D()));
  }
  return out;
}

}  // namespace a5
