#pragma once

#include <optional>
#include <vector>

#include "a5/exactfield/integer.hpp"
#include "a5/polyring/binary_form.hpp"

namespace a5 {

namespace detail {

// d^a/dX^a d^b/dY^b of a form of degree d, as a form of degree d-a-b.
template <FieldElement F>
std::vector<F> form_derivative(const std::vector<F>& c, int a, int b) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<F> out;
  out.reserve(d - a - b + 1);
  Integer fa, fb;
  for (int k = b; k <= d - a; ++k) {
    if (is_zero(c[k])) {
      out.push_back(c[k]);
      continue;
    }
    fa = 1;
    for (int t = 0; t < a; ++t) fa *= (d - k - t);
    fb = 1;
    for (int t = 0; t < b; ++t) fb *= (k - t);
    out.push_back(c[k] * F(Rational(Integer(fa * fb))));
  }
  return out;
}

}  // namespace detail

/// ((m-r)!(n-r)!/(m!n!)) sum_k (-1)^k C(r,k) d^r f/dX^(r-k)dY^k * d^r h/dX^k dY^(r-k).
template <FieldElement F>
BinaryForm<F> transvectant(const BinaryForm<F>& f, const BinaryForm<F>& h, int r) {
  const int m = f.degree(), n = h.degree();
  if (r < 0 || r > std::min(m, n))
    fail(ErrorKind::OrderTooLarge, "transvectant order " + std::to_string(r) + " exceeds form degrees");
  std::vector<F> acc(m + n - 2 * r + 1, F(Rational(0)));
  for (int k = 0; k <= r; ++k) {
    const std::vector<F> df = detail::form_derivative(f.coeffs(), r - k, k);
    const std::vector<F> dh = detail::form_derivative(h.coeffs(), k, r - k);
    F weight(Rational(binomial(r, k)));
    if (k % 2) weight = -weight;
    for (std::size_t i = 0; i < df.size(); ++i) {
      if (is_zero(df[i])) continue;
      const F wi = df[i] * weight;
      for (std::size_t j = 0; j < dh.size(); ++j)
        if (!is_zero(dh[j])) acc[i + j] = acc[i + j] + wi * dh[j];
    }
  }
  const Rational norm(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  for (auto& v : acc) v = v * F(norm);
  return BinaryForm<F>(std::move(acc));
}

template <FieldElement F>
struct InvariantSet {
  F I2, I4, I6;
  std::optional<F> I6star;
  std::optional<F> i1, i2, i3, i4;
  bool normalization_defined = true;  // false when I2 = 0
};

/// Classical invariants of a binary form of degree d >= 12.
template <FieldElement F>
InvariantSet<F> classical_invariants(const BinaryForm<F>& form) {
  const int d = form.degree();
  if (d < 12) fail(ErrorKind::DegreeTooSmall, "classical invariants need degree >= 12");
  InvariantSet<F> s;
  s.I2 = transvectant(form, form, d).coeffs()[0];
  const BinaryForm<F> j12 = transvectant(form, form, d - 6);
  s.I4 = transvectant(j12, j12, 12).coeffs()[0];
  const BinaryForm<F> g = transvectant(form, j12, 12);
  s.I6 = transvectant(g, g, d - 12).coeffs()[0];
  if (d >= 20) {
    const BinaryForm<F> j20 = transvectant(form, form, d - 10);
    const BinaryForm<F> h = transvectant(form, j20, 20);
    s.I6star = transvectant(h, h, d - 20).coeffs()[0];
  }
  if (is_zero(s.I2)) {
    s.normalization_defined = false;
  } else {
    const F i2sq = s.I2 * s.I2, i2cu = i2sq * s.I2;
    s.i1 = s.I4 / i2sq;
    s.i2 = s.I6 / i2cu;
    if (s.I6star) s.i3 = *s.I6star / i2cu;
  }
  if (!is_zero(s.I4)) s.i4 = s.I6 * s.I6 / (s.I4 * s.I4 * s.I4);
  return s;
}

/// (J_i, J_i)^i with J_i = (F, F)^(d - i/2), i divisible by 4.
template <FieldElement F>
F jj_transvectant(const BinaryForm<F>& form, int i) {
  if (i <= 0 || i % 4) fail(ErrorKind::InvalidArgument, "index must be a positive multiple of 4");
  const int r = form.degree() - i / 2;
  if (r < 0) fail(ErrorKind::DegreeTooSmall, "form degree too small for J_" + std::to_string(i));
  const BinaryForm<F> j = transvectant(form, form, r);
  return transvectant(j, j, i).coeffs()[0];
}

/// F(a X + b Y, c X + d Y).
template <FieldElement F>
BinaryForm<F> substitute(const BinaryForm<F>& form, const F& a, const F& b, const F& c, const F& d) {
  const int n = form.degree();
  // Work with polynomials in t = X/Y: (aX+bY) -> Y (a t + b), (cX+dY) -> Y (c t + d).
  const Poly<F> p{b, a}, q{d, c};
  std::vector<Poly<F>> ppow{Poly<F>(F(Rational(1)))}, qpow{Poly<F>(F(Rational(1)))};
  for (int k = 1; k <= n; ++k) {
    ppow.push_back(ppow.back() * p);
    qpow.push_back(qpow.back() * q);
  }
  Poly<F> acc;
  for (int k = 0; k <= n; ++k)
    if (!is_zero(form[k])) acc += ppow[n - k] * qpow[k] * form[k];
  return BinaryForm<F>::from_poly(acc, n);
}

}  // namespace a5
