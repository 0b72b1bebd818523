#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "a5/common/error.hpp"
#include "a5/exactfield/integer.hpp"
#include "a5/polyring/bivariate.hpp"
#include "a5/polyring/binary_form.hpp"
#include "a5/polyring/interpolate.hpp"
#include "a5/polyring/json.hpp"
#include "a5/polyring/poly.hpp"
#include "a5/polyring/rational_function.hpp"

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

QP random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coef(-7, 7);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back().is_zero()) c.back() = 1;
  return QP(c);
}

// det of the Sylvester matrix by fraction-free Bareiss elimination over Z.
Integer sylvester_det(const QP& a, const QP& b) {
  const int m = a.degree(), n = b.degree(), size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k).num();
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k).num();
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int p = k + 1;
      while (p < size && s[p][k] == 0) ++p;
      if (p == size) return 0;
      std::swap(s[k], s[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Integer t = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        s[i][j] = t;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

}  // namespace

TEST_CASE("resultant examples") {
  const QP x = QP::x();
  CHECK(resultant(x * x - QP(1), x - QP(2)) == Rational(3));
  CHECK(resultant(x - QP(5), x - QP(2)) == Rational(3));
  const QP p{Rational(1), Rational(0), Rational(3), Rational(-2)};
  CHECK(resultant(p, p) == Rational(0));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937 rng(98);
  for (int trial = 0; trial < 60; ++trial) {
    const QP a = random_poly(rng, 1 + trial % 6);
    const QP b = random_poly(rng, 1 + (trial / 6) % 5);
    CHECK(resultant(a, b) == Rational(sylvester_det(a, b)));
  }
}

TEST_CASE("division, gcd and extended gcd") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const QP a = random_poly(rng, 2 + trial % 4), b = random_poly(rng, 1 + trial % 3), c = random_poly(rng, 1 + trial % 2);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    if (resultant(a, b).is_zero()) continue;
    CHECK(gcd(a * c, b * c) == c.monic());
    const auto e = extended_gcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(e.g.degree() == 0);
  }
  CHECK(kind_of([] { divmod(QP::x(), QP()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("squarefree detection") {
  const QP x = QP::x();
  const QP f = (x - QP(1)) * (x - QP(1)) * (x + QP(2));
  CHECK_FALSE(is_squarefree(f));
  CHECK(squarefree_part(f) == ((x - QP(1)) * (x + QP(2))).monic());
  CHECK(is_squarefree(x * x + QP(1)));
}

TEST_CASE("polynomial interpolation") {
  CHECK(interpolate<Rational>({{0, 1}, {1, 1}}, 1) == QP(1));
  CHECK(interpolate<Rational>({{0, 0}, {1, 1}, {2, 4}}, 2) == QP::x() * QP::x());
  CHECK(kind_of([] { interpolate<Rational>({{0, 0}}, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { interpolate<Rational>({{1, 0}, {1, 1}}, 1); }) == ErrorKind::DuplicateAbscissa);
  CHECK(kind_of([] { interpolate<Rational>({{0, 0}, {1, 1}, {2, 4}}, 1); }) == ErrorKind::InconsistentData);

  std::mt19937 rng(100);
  const QP target = random_poly(rng, 4);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int k = 0; k < 14; ++k) pts.emplace_back(Rational(k - 6), target(Rational(k - 6)));
  CHECK(interpolate(std::vector(pts.begin(), pts.begin() + 13), 4) == target);
  CHECK(interpolate(pts, 4) == target);
}

TEST_CASE("composition") {
  const QP x = QP::x();
  CHECK((x * x).compose(x + QP(1)) == x * x + QP(2) * x + QP(1));
  const QF inv(QP(1), x);
  CHECK(inv.compose(inv) == QF::identity());
  const QF phi(x * x + QP(3), x - QP(1));
  CHECK(phi.compose(QF::identity()) == phi);

  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const QF f(random_poly(rng, 2), random_poly(rng, 1));
    const QF g(random_poly(rng, 1), random_poly(rng, 2));
    const QF h(random_poly(rng, 2), random_poly(rng, 2));
    CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    const Rational t(trial + 3, 7);
    if (!g.den()(t).is_zero() && !f.den()(g(t)).is_zero()) CHECK(f.compose(g)(t) == f(g(t)));
  }
}

TEST_CASE("bivariate interpolation recovers the polynomial") {
  std::mt19937 rng(102);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(3));
  for (auto& row : rows)
    for (auto& c : row) c = coef(rng);
  rows[3][2] = 5;
  const Bivariate<Rational> target(rows);
  std::vector<Rational> xs, ys;
  for (int k = 0; k < 4; ++k) xs.push_back(Rational(k + 1));
  for (int k = 0; k < 3; ++k) ys.push_back(Rational(2 * k - 1));
  const auto got = interpolate_bivariate<Rational>([&](const Rational& a, const Rational& b) { return target(a, b); }, 3, 2, xs, ys);
  CHECK(got == target);
}

TEST_CASE("binary form dehomogenization and json") {
  const QP f{Rational(3), Rational(0), Rational(2), Rational(0), Rational(1)};
  const auto form = BinaryForm<Rational>::from_poly(f, 6);
  CHECK(form.degree() == 6);
  CHECK(form.dehomogenize() == f);

  CHECK(poly_from_json<Rational>(poly_to_json(f)) == f);
  const QF r(f, QP::x() - QP(2));
  CHECK(rational_function_from_json<Rational>(rational_function_to_json(r)) == r);
  CHECK(kind_of([] { poly_from_json<Rational>(nlohmann::json::array()); }) == ErrorKind::ParseError);
}
