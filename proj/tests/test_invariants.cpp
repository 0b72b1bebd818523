#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "a5/common/error.hpp"
#include "a5/families/families.hpp"
#include "a5/invariants/dihedral.hpp"
#include "a5/invariants/transvectant.hpp"

using namespace a5;
using Form = BinaryForm<Rational>;

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

std::vector<Rational> random_coeffs(std::mt19937& rng, int n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<Rational> c(n);
  for (auto& x : c) x = coef(rng);
  return c;
}

Form random_form(std::mt19937& rng, int d) {
  auto c = random_coeffs(rng, d + 1);
  if (c.front().is_zero()) c.front() = 1;
  if (c.back().is_zero()) c.back() = -1;
  return Form(c);
}

Form operator+(const Form& a, const Form& b) {
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return Form(c);
}

Form operator*(const Rational& s, const Form& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return Form(c);
}

}  // namespace

TEST_CASE("transvectant basics") {
  std::mt19937 rng(17);
  const Form f = random_form(rng, 4), h = random_form(rng, 3);
  const auto prod = transvectant(f, h, 0);
  CHECK(prod.degree() == 7);
  CHECK(prod.dehomogenize() == f.dehomogenize() * h.dehomogenize());
  for (int r = 0; r <= 3; ++r) CHECK(transvectant(f, h, r).degree() == 7 - 2 * r);
  for (int r = 1; r <= 4; r += 2) CHECK(transvectant(f, f, r).is_zero());
  CHECK(kind_of([&] { transvectant(f, h, 4); }) == ErrorKind::OrderTooLarge);
}

TEST_CASE("second transvectant of a quadratic") {
  const Rational a(3), b(-5), c(7, 2);
  const auto t = transvectant(Form({a, b, c}), Form({a, b, c}), 2);
  CHECK(t.degree() == 0);
  CHECK(t[0] == (Rational(4) * a * c - b * b) / Rational(2));
}

TEST_CASE("transvectants are bilinear") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const Form f1 = random_form(rng, 6), f2 = random_form(rng, 6), h = random_form(rng, 5);
    const Rational s(trial + 1, 3);
    for (int r = 0; r <= 5; ++r)
      CHECK(transvectant(f1 + s * f2, h, r) == transvectant(f1, h, r) + s * transvectant(f2, h, r));
  }
}

TEST_CASE("I2 of X^d + Y^d") {
  for (int d : {12, 14, 20}) {
    std::vector<Rational> c(d + 1, Rational(0));
    c.front() = c.back() = 1;
    CHECK(classical_invariants(Form(c)).I2 == Rational(2));
  }
  CHECK(kind_of([] { classical_invariants(Form(std::vector<Rational>(11, Rational(1)))); }) == ErrorKind::DegreeTooSmall);
}

TEST_CASE("classical invariants under unimodular substitution") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 3; ++trial) {
    const Form f = random_form(rng, 12);
    const auto before = classical_invariants(f);
    for (const auto& m : std::vector<std::array<int, 4>>{{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}}) {
      const auto after = classical_invariants(substitute(f, Rational(m[0]), Rational(m[1]), Rational(m[2]), Rational(m[3])));
      CHECK(after.I2 == before.I2);
      CHECK(after.I4 == before.I4);
      CHECK(after.I6 == before.I6);
    }
  }
}

TEST_CASE("absolute invariants under scaling") {
  std::mt19937 rng(20);
  const Form f = random_form(rng, 24);
  const auto before = classical_invariants(f);
  REQUIRE(before.i1.has_value());
  REQUIRE(before.i3.has_value());
  for (const auto& m : std::vector<std::array<int, 4>>{{2, 0, 0, 1}, {1, 2, 3, 4}}) {
    const auto after = classical_invariants(substitute(f, Rational(m[0]), Rational(m[1]), Rational(m[2]), Rational(m[3])));
    CHECK(after.i1 == before.i1);
    CHECK(after.i2 == before.i2);
    CHECK(after.i3 == before.i3);
    CHECK(after.i4 == before.i4);
  }
}

TEST_CASE("(J_i, J_i)^i vanishes on an A5 curve") {
  const auto c = curve_equation_x5(29, {Rational(2)});
  const auto form = Form::from_poly(c.f, 60);
  for (int i : {4, 8, 16, 28}) CHECK(is_zero(jj_transvectant(form, i)));
  CHECK(kind_of([&] { jj_transvectant(form, 6); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("dihedral invariants of normalized coefficients") {
  std::mt19937 rng(21);
  auto b = random_coeffs(rng, 9, 1, 9);
  b.front() = b.back() = 1;
  const int d = 8;
  const auto u = dihedral_invariants(b);
  CHECK(u.d == d);
  REQUIRE(u.u.size() == static_cast<std::size_t>(d - 1));
  for (int i = 1; i < d; ++i) CHECK(u(i) == pow(b[1], d - i) * b[i] + pow(b[d - 1], d - i) * b[d - i]);
}

TEST_CASE("dihedral invariants under scaling and reversal") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_coeffs(rng, 11, 1, 12);
    const auto u = dihedral_invariants(b);

    std::vector<Rational> scaled(b);
    for (auto& x : scaled) x *= Rational(trial + 2, 5);
    CHECK(dihedral_invariants(scaled).u == u.u);

    const std::vector<Rational> reversed(b.rbegin(), b.rend());
    CHECK(dihedral_invariants(reversed).u == u.u);

    std::vector<Rational> stretched(b);
    Rational t(1);
    for (auto& x : stretched) {
      x *= t;
      t *= Rational(-3, 2);
    }
    CHECK(dihedral_invariants(stretched).u == u.u);
  }
  CHECK(kind_of([] { dihedral_invariants(std::vector<Rational>{0, 1, 1}); }) == ErrorKind::DegenerateLeadingOrTrailing);
}

TEST_CASE("group relation detects neither on random polynomials") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = random_coeffs(rng, 31, -20, 20);
    if (b.front().is_zero()) b.front() = 3;
    if (b.back().is_zero()) b.back() = -7;
    CHECK(check_group_relation(dihedral_invariants(b), 29) == GroupRelation::Neither);
  }
}

TEST_CASE("group relation on hand-built invariants") {
  DihedralInvariants<Rational> u;
  u.d = 4;
  u.u = {Rational(8), Rational(0), Rational(4)};
  CHECK(check_group_relation(u, 3) == GroupRelation::Z2xA5);
  u.u[0] = Rational(-8);
  CHECK(check_group_relation(u, 3) == GroupRelation::SL2_5);
  CHECK(check_group_relation(u, 9) == GroupRelation::Neither);
}
