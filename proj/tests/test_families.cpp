#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "a5/common/error.hpp"
#include "a5/families/families.hpp"
#include "a5/icosa/icosa.hpp"

using namespace a5;
using QP = Poly<Rational>;

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

}  // namespace

TEST_CASE("classifying genera") {
  const auto c29 = classify_genus(29);
  CHECK(c29.case_no == 1);
  CHECK(c29.group == AutGroup::Z2xA5);
  CHECK(c29.delta == 1);
  CHECK(c29.multipliers.empty());

  const auto c5 = classify_genus(5);
  CHECK(c5.case_no == 2);
  CHECK(c5.delta == 0);
  CHECK(c5.multipliers == std::vector<Multiplier>{Multiplier::S});

  const auto c30 = classify_genus(30);
  CHECK(c30.case_no == 8);
  CHECK(c30.group == AutGroup::SL2_5);
  CHECK(c30.multipliers == std::vector<Multiplier>{Multiplier::T, Multiplier::R, Multiplier::S});

  CHECK(kind_of([] { classify_genus(7); }) == ErrorKind::NotInLocus);
}

TEST_CASE("classification is consistent with the case offsets") {
  for (int g = 2; g <= 300; ++g) {
    CaseDescriptor cs;
    try {
      cs = classify_genus(g);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotInLocus);
      for (int c = 1; c <= 8; ++c) CHECK((g - case_offset(c)) % 30 != 0);
      continue;
    }
    CHECK(cs.genus == g);
    CHECK(g - case_offset(cs.case_no) == 30 * cs.delta);
    CHECK(case_descriptor(cs.case_no, cs.delta).genus == g);
  }
}

TEST_CASE("lambda factor of the x5 model") {
  const Rational lambda(13, 3);
  const auto f = lambda_factor_x5(lambda);
  CHECK(f.degree() == 60);
  CHECK(f.coeff(55) == Rational(684) - lambda);
  CHECK(f.coeff(60) == Rational(-1));
  CHECK(f.coeff(0) == Rational(-1));
  const auto R = icosa_R(), S = icosa_S();
  CHECK(f == -(R * R * R) - QP(lambda) * pow(S, 5));
}

TEST_CASE("curve equations") {
  const auto c30 = curve_equation_x5(30, {});
  CHECK(c30.f.degree() == 61);
  CHECK(c30.f == icosa_T() * icosa_R() * icosa_S());

  const auto c29 = curve_equation_x5(29, {Rational(2)});
  CHECK(c29.f.degree() == 60);
  CHECK(is_squarefree(c29.f));
  CHECK(weierstrass_count(c29.f) == 60);

  const auto c5 = curve_equation_x5(5, {});
  CHECK(c5.f == QP{Rational(0), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(11),
                   Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(weierstrass_count(c5.f) == 12);

  CHECK(kind_of([] { curve_equation_x5(5, {Rational(1)}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { curve_equation_x5(29, {Rational(1728)}); }) == ErrorKind::DegenerateBranchValue);
}

TEST_CASE("x2 model curves are even") {
  const auto c = curve_equation_x2(29, {Gaussian(Rational(2))});
  CHECK(c.f.degree() == 60);
  const auto b = even_model(c.f);
  CHECK(b.size() == 31);
  CHECK_FALSE(is_zero(b.front() * b.back()));
}

TEST_CASE("even models") {
  CHECK(even_model(QP{Rational(3), Rational(0), Rational(2), Rational(0), Rational(1)}) ==
        std::vector<Rational>{3, 2, 1});
  CHECK(even_model(QP{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}) ==
        std::vector<Rational>{1, 0, 1});
  CHECK(kind_of([] { even_model(QP{Rational(1), Rational(1), Rational(1)}); }) == ErrorKind::NotEven);
}

TEST_CASE("model names") {
  CHECK(parse_model("x5") == Model::X5);
  CHECK(parse_model("x2") == Model::X2);
  CHECK(kind_of([] { parse_model("x7"); }) == ErrorKind::InvalidArgument);
}
