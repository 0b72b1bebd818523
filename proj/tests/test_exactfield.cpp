#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <json.hpp>

#include "a5/common/error.hpp"
#include "a5/exactfield/cyclotomic.hpp"
#include "a5/exactfield/embed.hpp"
#include "a5/exactfield/gaussian.hpp"
#include "a5/exactfield/integer.hpp"
#include "a5/exactfield/json.hpp"
#include "a5/exactfield/quadratic.hpp"
#include "a5/exactfield/rational.hpp"

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

// Integer polynomial arithmetic modulo x^60 - 1 and Phi_60, kept apart from the library.
using IntPoly = std::vector<long long>;

IntPoly mul_mod_x60(const IntPoly& a, const IntPoly& b) {
  IntPoly r(60, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[(i + j) % 60] += a[i] * b[j];
  return r;
}

bool divisible_by_phi60(IntPoly p) {
  // Phi_60 = x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1, monic.
  const IntPoly phi{1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1};
  for (int k = static_cast<int>(p.size()) - 1; k >= 16; --k) {
    const long long q = p[k];
    if (q == 0) continue;
    for (int j = 0; j <= 16; ++j) p[k - 16 + j] -= q * phi[j];
  }
  for (int k = 0; k < 16; ++k)
    if (p[k] != 0) return false;
  return true;
}

AlgebraicNumber random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::array<Rational, AlgebraicNumber::kDegree> c;
  for (auto& x : c) x = Rational(coef(rng), 1 + (coef(rng) + 9) % 4);
  return AlgebraicNumber::from_coefficients(c);
}

}  // namespace

TEST_CASE("rational parse and arithmetic") {
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { Rational::parse("abc"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Rational(0).inverse(); }) == ErrorKind::DivisionByZero);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("integer helpers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(6) == 720);
  CHECK(is_perfect_square(Integer(400320064)));
  CHECK_FALSE(is_perfect_square(Integer(-4)));
  CHECK(is_perfect_square(Rational(9, 49)));
  CHECK(exact_sqrt(Rational(9, 49)) == Rational(3, 7));
  const auto split = squarefree_split(Integer(-2 * 2 * 3 * 5 * 5 * 7));
  CHECK(split.squarefree == Integer(-21));
  CHECK(is_probable_prime(Integer(1000003)));
}

TEST_CASE("roots of unity in Q(zeta_60)") {
  const auto z15 = AlgebraicNumber::zeta_power(15);
  CHECK(z15 * z15 == AlgebraicNumber(-1));
  CHECK(AlgebraicNumber::zeta_power(1) * AlgebraicNumber::zeta_power(59) == AlgebraicNumber(1));
  CHECK(AlgebraicNumber::zeta_power(60) == AlgebraicNumber(1));
  CHECK(root_of_unity_order(AlgebraicNumber::epsilon5()) == 5);
  CHECK(root_of_unity_order(AlgebraicNumber::epsilon3()) == 3);
  CHECK(AlgebraicNumber::zeta_power(7).galois(11) == AlgebraicNumber::zeta_power(77));
}

TEST_CASE("omega satisfies its minimal polynomial") {
  const auto w = AlgebraicNumber::omega();
  CHECK(w * w + w - AlgebraicNumber(1) == AlgebraicNumber(0));

  IntPoly omega(60, 0);
  omega[12] = 1;
  omega[48] = 1;
  IntPoly lhs = mul_mod_x60(omega, omega);
  for (int k = 0; k < 60; ++k) lhs[k] += omega[k];
  lhs[0] -= 1;
  CHECK(divisible_by_phi60(lhs));
}

TEST_CASE("sqrt5 and sqrt3 square correctly") {
  CHECK(AlgebraicNumber::sqrt5() * AlgebraicNumber::sqrt5() == AlgebraicNumber(5));
  CHECK(AlgebraicNumber::sqrt3() * AlgebraicNumber::sqrt3() == AlgebraicNumber(3));
}

TEST_CASE("inverse and sqrt on random elements") {
  std::mt19937 rng(60);
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_element(rng);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == AlgebraicNumber(1));
    const auto sq = x * x;
    const auto r = sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
  }
  CHECK(kind_of([] { AlgebraicNumber(0).inverse(); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("embedding into quadratic subfields") {
  const auto q = embed_subfield(AlgebraicNumber(Rational(7, 2)));
  REQUIRE(std::holds_alternative<Rational>(q));
  CHECK(std::get<Rational>(q) == Rational(7, 2));

  const auto w = embed_subfield(AlgebraicNumber::omega());
  REQUIRE(std::holds_alternative<QuadraticElement>(w));
  const auto& e = std::get<QuadraticElement>(w);
  CHECK(e.a() == Rational(-1, 2));
  CHECK(e.b() == Rational(1, 2));
  CHECK(e.D() == 5);
  CHECK(to_algebraic(e) == AlgebraicNumber::omega());

  CHECK(kind_of([] { embed_subfield(AlgebraicNumber::zeta_power(1)); }) == ErrorKind::NotInQuadraticSubfield);
}

TEST_CASE("gaussian arithmetic") {
  const Gaussian a(Rational(1), Rational(2));
  CHECK(a * a.conj() == Gaussian(Rational(5)));
  CHECK(a * a.inverse() == Gaussian(Rational(1)));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(Rational(-1)));
  CHECK(Gaussian::from_algebraic(a.to_algebraic()) == a);
}

TEST_CASE("quadratic elements") {
  const auto s5 = QuadraticElement::sqrt_of(5);
  CHECK(s5 * s5 == QuadraticElement(Rational(5)));
  const auto x = QuadraticElement::from_squarefree(Rational(1), Rational(3), Integer(5));
  CHECK(x * x.inverse() == QuadraticElement(Rational(1)));
  CHECK(x.norm() == Rational(1 - 45));
  CHECK(kind_of([] { QuadraticElement::sqrt_of(2) + QuadraticElement::sqrt_of(3); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("json round trips") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(rng);
    nlohmann::json j = x;
    CHECK(j.get<AlgebraicNumber>() == x);
  }
  nlohmann::json jq = Rational(-22, 7);
  CHECK(jq.get<Rational>() == Rational(-22, 7));
  nlohmann::json jg = Gaussian(Rational(512), Rational(256));
  CHECK(jg.get<Gaussian>() == Gaussian(Rational(512), Rational(256)));
  const auto qe = QuadraticElement::from_squarefree(Rational(2), Rational(-1, 3), Integer(-15));
  nlohmann::json jqe = qe;
  CHECK(jqe.get<QuadraticElement>() == qe);
  CHECK(kind_of([] { nlohmann::json::parse("\"x/y\"").get<Rational>(); }) == ErrorKind::ParseError);
}
