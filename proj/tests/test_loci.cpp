#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "a5/common/error.hpp"
#include "a5/loci/loci.hpp"

using namespace a5;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no a5::Error thrown");
  return ErrorKind::UsageError;
}

const LocusCurve& case1() {
  static const LocusCurve l = build_locus(1);
  return l;
}

QPoly quadratic(long long a, long long b, long long c) {
  return QPoly{Rational(Integer(std::to_string(c))), Rational(Integer(std::to_string(b))), Rational(Integer(std::to_string(a)))};
}

}  // namespace

TEST_CASE("one dimensional cases") {
  CHECK(one_dimensional_genus(1) == 29);
  CHECK(one_dimensional_genus(5) == 44);
  CHECK(kind_of([] { one_dimensional_genus(9); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("absolute invariants agree with direct evaluation") {
  const auto& l = case1();
  for (const Rational& lambda : {Rational(5), Rational(-3, 2), Rational(100)}) {
    const auto direct = invariants_at(1, lambda);
    CHECK(l.i1(lambda) == *direct.i1);
    CHECK(l.i2(lambda) == *direct.i2);
  }
}

TEST_CASE("elimination polynomial") {
  const auto& l = case1();
  CHECK(l.F.degree_x() == 6);
  CHECK(l.F.degree_y() == 4);
  CHECK(l.F(l.i1(Rational(5)), l.i2(Rational(5))).is_zero());
  CHECK(l.F(l.i1(Rational(-2, 7)), l.i2(Rational(-2, 7))).is_zero());
  CHECK(l.F.coeff(0, 4) == Rational(Integer("20104543529222176607891970551365425625")));
  // (0, 0) is a singular point of F
  CHECK(l.F.coeff(0, 0).is_zero());
  CHECK(l.F.coeff(1, 0).is_zero());
  CHECK(l.F.coeff(0, 1).is_zero());
}

TEST_CASE("recovering lambda from the invariants") {
  const auto& l = case1();
  for (const Rational& lambda : {Rational(7), Rational(-3, 2)})
    CHECK(solve_lambda(l.i1(lambda), l.i2(lambda), l) == lambda);
  CHECK(kind_of([&] { solve_lambda(Rational(0), Rational(0), l); }) == ErrorKind::SingularPoint);
  CHECK(kind_of([&] { solve_lambda(Rational(1), Rational(1), l); }) == ErrorKind::NotOnLocus);
}

TEST_CASE("singular fibers of case 1") {
  const auto& l = case1();
  const auto fibers = singular_fibers(l);
  REQUIRE(fibers.size() == 3);
  std::map<FiberKind, SingularFiber> by_kind;
  for (const auto& f : fibers) by_kind[f.kind] = f;
  REQUIRE(by_kind.size() == 3);

  const auto& zero = by_kind[FiberKind::ZeroLocus];
  CHECK((zero.q == quadratic(791091587LL, -610337874000LL, -15159961555740000LL) ||
         zero.q == -quadratic(791091587LL, -610337874000LL, -15159961555740000LL)));
  CHECK(zero.d_table == Integer("127067509222"));
  CHECK(by_kind[FiberKind::InfinityLocus].d_table == Integer("-27468005002203037701"));
  CHECK(by_kind[FiberKind::Collision].d_table == Integer("6594752841114090745134757"));
  for (const auto& f : fibers) {
    CHECK(discriminant_quadratic(f.q) == Rational(f.D));
    CHECK(squarefree_split(f.D).squarefree == f.d_table);
  }
  CHECK(fiber_collides(by_kind[FiberKind::Collision], l));
}

TEST_CASE("kappa fitting and rescaling") {
  const QPoly x = QPoly::x();
  const QFunction reference(x * x + QPoly(1), x - QPoly(3));
  const QFunction computed(QPoly(Rational(5, 2)) * (x * x + QPoly(1)), x - QPoly(3));
  const auto fit = fit_kappa(computed, reference, {Rational(1), Rational(2), Rational(7)});
  CHECK(fit.constant);
  CHECK(fit.kappa == Rational(2, 5));

  const Bivariate<Rational> f({{Rational(0), Rational(2)}, {Rational(3), Rational(0)}});
  const auto g = rescale_locus(f, Rational(2), Rational(3));
  CHECK(f(Rational(2), Rational(-3)).is_zero());
  CHECK(g(Rational(4), Rational(-9)).is_zero());
  CHECK_FALSE(g(Rational(2), Rational(-3)).is_zero());
}

TEST_CASE("rational model round trip") {
  std::mt19937 rng(487);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational lambda(num(rng), den(rng));
    if (lambda == Rational(1728) || lambda.is_zero()) continue;
    const auto u = dihedral_invariants_x2(29, {lambda});
    CHECK(check_group_relation(u, 29) == GroupRelation::Z2xA5);
    const auto model = rational_model(u, AutGroup::Z2xA5);
    CHECK(dihedral_invariants(even_model(model.f)).u == u.u);
  }
}
