#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "a5/common/error.hpp"
#include "a5/decomp/decomp.hpp"
#include "a5/icosa/icosa.hpp"

using namespace a5;
using QP = Poly<Rational>;
using QF = RationalFunction<Rational>;

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

bool is_scaling(const MoebiusMap& m) { return is_zero(m.b()) && is_zero(m.c()); }

QP random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coef(-6, 6);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back().is_zero()) c.back() = 2;
  return QP(c);
}

}  // namespace

TEST_CASE("left factors of polynomials") {
  const QP x = QP::x();
  const QF f(x * x * x * x + QP(2) * x * x + QP(3));
  const auto d = left_factor(f, QF(x * x));
  REQUIRE(d.has_value());
  CHECK(d->outer == QF(x * x + QP(2) * x + QP(3)));
  CHECK_FALSE(left_factor(QF(x * x * x), QF(x * x)).has_value());
  CHECK(kind_of([&] { left_factor(f, QF(QP(4))); }) == ErrorKind::ConstantInner);
}

TEST_CASE("left_factor inverts composition") {
  std::mt19937 rng(235);
  for (int trial = 0; trial < 8; ++trial) {
    const QF g(random_poly(rng, 2), random_poly(rng, 1 + trial % 2));
    const QF h(random_poly(rng, 2), random_poly(rng, 1));
    const QF f = g.compose(h);
    if (f.degree() != g.degree() * h.degree()) continue;
    const auto d = left_factor(f, h);
    REQUIRE(d.has_value());
    CHECK(d->outer.compose(h) == f);
    CHECK(d->outer.degree() == g.degree());
  }
}

TEST_CASE("phi decomposes through x^5") {
  const auto d = left_factor(phi(), QF(QP::monomial(Rational(1), 5)));
  REQUIRE(d.has_value());
  CHECK(d->outer.degree() == 12);
}

TEST_CASE("conjugating an involution to a scaling") {
  const MoebiusMap gamma(0, -1, 1, 0);
  const auto s = normalize_element_to_scaling(gamma);
  CHECK(is_scaling(s * gamma * s.inverse()));
  CHECK(s * gamma * s.inverse() == MoebiusMap(-1, 0, 0, 1));

  const auto p = cayley_sigma();
  CHECK(p * gamma * p.inverse() == MoebiusMap(-1, 0, 0, 1));

  CHECK(is_scaling(normalize_element_to_scaling(MoebiusMap(-1, 0, 0, 1))));
  CHECK(is_scaling(normalize_element_to_scaling(MoebiusMap(AlgebraicNumber::epsilon5(), 0, 0, 1))));
  CHECK(kind_of([] { normalize_element_to_scaling(MoebiusMap(1, 1, 0, 1)); }) == ErrorKind::ParabolicElement);
}

TEST_CASE("conjugated A5 keeps its order profile") {
  const auto g = conjugate_group(build_a5(), cayley_sigma());
  CHECK(g.size() == 60);
  CHECK(g.order_profile() == build_a5().order_profile());
  CHECK(g.contains(MoebiusMap(-1, 0, 0, 1)));
}

TEST_CASE("phi1 and the barred forms") {
  const auto f = phi1();
  CHECK(f.degree() == 60);
  CHECK(rbar().degree() == 20);
  CHECK(tbar().degree() == 29);
  CHECK(sbar().degree() == 12);
  const auto num = Gaussian(Rational(64)) * rbar() * rbar() * rbar();
  const auto den = sbar() * sbar() * sbar() * sbar() * sbar();
  CHECK(f == GaussianFunction(num, den));

  const auto rel = check_tbar_relation(Gaussian(Rational(256), Rational(512)));
  CHECK(rel.proportional);
  CHECK(rel.matches_claim);
  CHECK(rel.constant == Gaussian(Rational(256), Rational(512)));
}

TEST_CASE("inner components of phi1") {
  const auto x2 = check_inner(InnerKind::X2);
  CHECK(x2.found);
  CHECK(x2.outer_degree == 30);
  const auto x5 = check_inner(InnerKind::X5);
  CHECK(x5.found);
  CHECK(x5.outer_degree == 12);
}
