#pragma once

#include <algorithm>
#include <vector>

#include "a5/exactfield/integer.hpp"
#include "a5/polyring/interpolate.hpp"
#include "a5/polyring/poly.hpp"

namespace a5 {

/// Dense polynomial sum c[i][j] x^i y^j.
template <FieldElement F>
class Bivariate {
 public:
  Bivariate() = default;
  explicit Bivariate(std::vector<std::vector<F>> c) : c_(std::move(c)) { trim(); }
  /// Polynomial in x with coefficients given as polynomials in y.
  static Bivariate from_x_coefficients(const std::vector<Poly<F>>& by_x) {
    std::vector<std::vector<F>> c(by_x.size());
    for (std::size_t i = 0; i < by_x.size(); ++i) c[i] = by_x[i].coeffs();
    return Bivariate(std::move(c));
  }

  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  int degree_y() const {
    int d = -1;
    for (const auto& r : c_) d = std::max(d, static_cast<int>(r.size()) - 1);
    return d;
  }
  bool is_zero() const { return c_.empty(); }
  F coeff(std::size_t i, std::size_t j) const {
    if (i < c_.size() && j < c_[i].size()) return c_[i][j];
    return F(Rational(0));
  }
  const std::vector<std::vector<F>>& rows() const { return c_; }

  F operator()(const F& x, const F& y) const { return in_y_at_x(x)(y); }
  /// Specialize x, leaving a polynomial in y.
  Poly<F> in_y_at_x(const F& x) const {
    std::vector<F> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      for (auto& a : acc) a = a * x;
      if (acc.size() < it->size()) acc.resize(it->size(), F(Rational(0)));
      for (std::size_t j = 0; j < it->size(); ++j) acc[j] = acc[j] + (*it)[j];
    }
    return Poly<F>(std::move(acc));
  }
  /// Specialize y, leaving a polynomial in x.
  Poly<F> in_x_at_y(const F& y) const {
    std::vector<F> r;
    for (const auto& row : c_) r.push_back(Poly<F>(row)(y));
    return Poly<F>(std::move(r));
  }

  Bivariate operator*(const F& s) const {
    auto c = c_;
    for (auto& r : c)
      for (auto& v : r) v = v * s;
    return Bivariate(std::move(c));
  }
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    for (auto& r : c_)
      while (!r.empty() && detail::field_is_zero(r.back())) r.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }
  std::vector<std::vector<F>> c_;
};

/// Recovers a bivariate polynomial of bidegree <= (dx, dy) from a callback f(x, y) sampled on the
/// grid xs * ys; samples beyond dx+1 (resp. dy+1) abscissae serve as a consistency check.
template <FieldElement F, class Fn>
Bivariate<F> interpolate_bivariate(Fn&& f, int dx, int dy, const std::vector<F>& xs, const std::vector<F>& ys) {
  std::vector<Poly<F>> columns;  // for each sample x: polynomial in y
  for (const F& x : xs) {
    std::vector<std::pair<F, F>> pts;
    for (const F& y : ys) pts.emplace_back(y, f(x, y));
    columns.push_back(interpolate(pts, dy));
  }
  std::vector<std::vector<F>> c(dx + 1, std::vector<F>(dy + 1, F(Rational(0))));
  for (int j = 0; j <= dy; ++j) {
    std::vector<std::pair<F, F>> pts;
    for (std::size_t k = 0; k < xs.size(); ++k) pts.emplace_back(xs[k], columns[k].coeff(j));
    const Poly<F> pj = interpolate(pts, dx);
    for (int i = 0; i <= dx; ++i) c[i][j] = pj.coeff(i);
  }
  return Bivariate<F>(std::move(c));
}

/// Integer-coefficient primitive representative with positive leading entry (highest x, then y).
inline Bivariate<Rational> primitive_part(const Bivariate<Rational>& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& r : p.rows())
    for (const auto& v : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
  auto c = p.rows();
  for (auto& r : c)
    for (auto& v : r) {
      v = v * Rational(l);
      const Integer n = v.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  const auto& top = c.back();
  const int s = top.back().sign();
  for (auto& r : c)
    for (auto& v : r) v = v / Rational(g) * Rational(s);
  return Bivariate<Rational>(std::move(c));
}

inline Poly<Rational> primitive_part(const Poly<Rational>& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
  std::vector<Rational> c = p.coeffs();
  for (auto& v : c) {
    v = v * Rational(l);
    const Integer n = v.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  const int s = c.back().sign();
  for (auto& v : c) v = v / Rational(g) * Rational(s);
  return Poly<Rational>(std::move(c));
}

}  // namespace a5
