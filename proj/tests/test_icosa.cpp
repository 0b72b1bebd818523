#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "a5/common/error.hpp"
#include "a5/icosa/icosa.hpp"
#include "a5/icosa/moebius.hpp"

using namespace a5;

namespace {

MoebiusGroup negation_group() { return generate_group({MoebiusMap(-1, 0, 0, 1)}); }

CycloFunction x_power(int k) { return CycloFunction(Poly<AlgebraicNumber>::monomial(AlgebraicNumber(1), k)); }

}  // namespace

TEST_CASE("the group generated by sigma1 and sigma2") {
  const auto g = build_a5();
  CHECK(g.size() == 60);
  CHECK(g.order_profile() == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK((sigma1() * sigma1()).is_identity());
  CHECK(sigma2().order() == 5);
  CHECK((sigma1() * sigma2()).order() == 3);
  for (const auto& a : g.elements()) {
    CHECK(g.contains(a.inverse()));
    CHECK(g.contains(a * sigma2()));
  }
}

TEST_CASE("moebius maps are projective") {
  const MoebiusMap m(2, 4, 0, 2);
  CHECK(m == MoebiusMap(1, 2, 0, 1));
  CHECK((m * m.inverse()).is_identity());
  CHECK(MoebiusMap(0, -1, 1, 0).order() == 2);
}

TEST_CASE("symmetric generators of small groups") {
  const auto trivial = generate_group({MoebiusMap::identity()});
  CHECK(trivial.size() == 1);
  CHECK(symmetric_generator(trivial, 1) == CycloFunction::identity());

  const auto neg = negation_group();
  CHECK(neg.size() == 2);
  CHECK(symmetric_generator(neg, 1).is_zero());
  CHECK(symmetric_generator(neg, 2) == CycloFunction(Poly<AlgebraicNumber>::monomial(AlgebraicNumber(-1), 2)));
}

TEST_CASE("R, S, T values") {
  const auto R = icosa_R(), S = icosa_S(), T = icosa_T();
  CHECK(R.degree() == 20);
  CHECK(S.degree() == 11);
  CHECK(T.degree() == 30);
  CHECK(R.coeff(15) == Rational(-228));
  CHECK(R.coeff(10) == Rational(494));
  CHECK(R(Rational(1)) == Rational(496));
  CHECK(S(Rational(1)) == Rational(11));
  CHECK(T(Rational(1)) * T(Rational(1)) == Rational(400320064));
  CHECK(Rational(496) * 496 * 496 + Rational(1728) * 161051 == Rational(400320064));
  CHECK(T(Rational(0)) == Rational(1));
  CHECK(S(Rational(0)) == Rational(0));
  CHECK(R(Rational(0)) == Rational(1));
}

TEST_CASE("phi and the icosahedral identity") {
  const auto f = phi();
  CHECK(f.degree() == 60);
  CHECK(f(Rational(1)) == Rational(-122023936, 161051));
  const auto id = verify_icosahedral_identity();
  CHECK(id.holds);
  CHECK(id.degree == 60);
}

TEST_CASE("orbit invariance") {
  const auto g = build_a5();
  CHECK(orbit_invariance_check(g, rational_function_cast<AlgebraicNumber>(phi())));
  CHECK_FALSE(orbit_invariance_check(g, x_power(5)));
  CHECK(orbit_invariance_check(negation_group(), x_power(2)));
  CHECK_FALSE(orbit_invariance_check(negation_group(), x_power(3)));
}

TEST_CASE("moebius relation between functions") {
  const auto f = rational_function_cast<AlgebraicNumber>(phi());
  const auto m = MoebiusMap(3, 1, 1, 2).as_rational_function();
  const auto rel = moebius_relation(m.compose(f), f);
  REQUIRE(rel.has_value());
  CHECK(*rel == MoebiusMap(3, 1, 1, 2));
  CHECK_FALSE(moebius_relation(x_power(3), x_power(2)).has_value());
}
