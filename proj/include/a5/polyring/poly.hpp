#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "a5/common/error.hpp"
#include "a5/exactfield/field.hpp"

namespace a5 {

/// Dense univariate polynomial, lowest degree first; the zero polynomial has no coefficients.
template <FieldElement F>
class Poly {
 public:
  using value_type = F;

  Poly() = default;
  Poly(const F& c) {
    if (!detail::field_is_zero(c)) c_.push_back(c);
  }
  Poly(int c) : Poly(F(Rational(c))) {}
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly x() { return monomial(F(Rational(1)), 1); }
  static Poly monomial(const F& c, std::size_t k) {
    if (detail::field_is_zero(c)) return {};
    std::vector<F> v(k + 1, F(Rational(0)));
    v[k] = c;
    return Poly(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(Rational(0)); }
  const F& leading() const {
    if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  void set_coeff(std::size_t k, const F& v) {
    if (k >= c_.size()) c_.resize(k + 1, F(Rational(0)));
    c_[k] = v;
    trim();
  }

  F operator()(const F& t) const {
    F acc(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  /// Evaluates at a point of an extension G of F (G constructible from F).
  template <class G>
  G evaluate_in(const G& t) const {
    G acc(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + G(*it);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const F& s) {
    if (detail::field_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v = v * s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::field_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!detail::field_is_zero(b.c_[j])) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(Rational(0)));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(Rational(static_cast<long>(i)));
    return Poly(std::move(r));
  }
  Poly monic() const {
    if (is_zero()) return {};
    const F inv = F(Rational(1)) / leading();
    return *this * inv;
  }
  /// p(x) -> p(x^k).
  Poly inflate(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<F> r((c_.size() - 1) * k + 1, F(Rational(0)));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Poly(std::move(r));
  }
  /// p(x) -> p(c x).
  Poly scale_variable(const F& s) const {
    std::vector<F> r = c_;
    F p(Rational(1));
    for (auto& v : r) {
      v = v * p;
      p = p * s;
    }
    return Poly(std::move(r));
  }
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::field_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class G, class F>
Poly<G> poly_cast(const Poly<F>& p) {
  std::vector<G> r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(G(c));
  return Poly<G>(std::move(r));
}

template <FieldElement F>
Poly<F> pow(const Poly<F>& base, unsigned e) {
  Poly<F> r(F(Rational(1))), b = base;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

template <FieldElement F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(a.degree() - b.degree() + 1, F(Rational(0)));
  const F inv = F(Rational(1)) / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    const F t = r[k] * inv;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j)
      if (!is_zero(b.coeffs()[j])) r[k - db + j] = r[k - db + j] - t * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <FieldElement F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}
template <FieldElement F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Quotient a/b, throwing InconsistentData when b does not divide a.
template <FieldElement F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::InconsistentData, "polynomial division is not exact");
  return q;
}

/// Monic gcd; gcd(0,0) = 0.
template <FieldElement F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s a + t b = g monic.
template <FieldElement F>
struct ExtendedGcd {
  Poly<F> g, s, t;
};
template <FieldElement F>
ExtendedGcd<F> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0(F(Rational(1))), s1, t0, t1(F(Rational(1)));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = F(Rational(1)) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <FieldElement F>
bool is_squarefree(const Poly<F>& p) {
  return gcd(p, p.derivative()).degree() <= 0;
}

/// Product of the distinct irreducible factors, made monic.
template <FieldElement F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly<F>(F(Rational(1)));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

/// Sylvester-matrix resultant (p-rows first) via the subresultant PRS.
template <FieldElement F>
F resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  const F one(Rational(1));
  F g = one, h = one, s = one;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    F r = one;
    for (int k = 0; k < a.degree(); ++k) r = r * b.leading();
    return s * r;
  }
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    F lb = one;
    for (int k = 0; k <= delta; ++k) lb = lb * b.leading();
    Poly<F> r = (a * lb) % b;
    a = std::move(b);
    if (r.is_zero()) return F(Rational(0));
    F div = g;
    for (int k = 0; k < delta; ++k) div = div * h;
    b = r * (one / div);
    g = a.leading();
    F gd = one;
    for (int k = 0; k < delta; ++k) gd = gd * g;
    if (delta == 0) {
      h = h * gd / h;
    } else {
      F hp = one;
      for (int k = 0; k < delta - 1; ++k) hp = hp * h;
      h = gd / hp;
    }
    if (b.degree() == 0) break;
  }
  F lb = one;
  for (int k = 0; k < a.degree(); ++k) lb = lb * b.leading();
  F hp = one;
  for (int k = 0; k < a.degree() - 1; ++k) hp = hp * h;
  return s * lb / hp;
}

template <FieldElement F>
F discriminant_quadratic(const Poly<F>& q) {
  if (q.degree() != 2) fail(ErrorKind::DegreeMismatch, "expected a quadratic");
  return q.coeff(1) * q.coeff(1) - F(Rational(4)) * q.coeff(0) * q.coeff(2);
}

template <FieldElement F>
std::string to_string(const Poly<F>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace a5
