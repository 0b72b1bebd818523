#pragma once

#include <utility>
#include <vector>

#include "a5/polyring/poly.hpp"

namespace a5 {

/// Homogeneous F(X, Y) = sum c_k X^(d-k) Y^k.
template <FieldElement F>
class BinaryForm {
 public:
  BinaryForm() : c_(1, F(Rational(0))) {}
  explicit BinaryForm(std::vector<F> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(ErrorKind::InvalidArgument, "binary form needs d+1 coefficients");
  }
  /// Y^d f(X/Y); requires deg f <= d.
  static BinaryForm from_poly(const Poly<F>& f, int d) {
    if (f.degree() > d) fail(ErrorKind::DegreeMismatch, "polynomial degree exceeds form degree");
    std::vector<F> c(d + 1, F(Rational(0)));
    for (int k = 0; k <= d; ++k) c[k] = f.coeff(d - k);
    return BinaryForm(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!detail::field_is_zero(v)) return false;
    return true;
  }
  /// f(x) = F(x, 1).
  Poly<F> dehomogenize() const {
    std::vector<F> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[c_.size() - 1 - k];
    return Poly<F>(std::move(r));
  }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<F> c_;
};

}  // namespace a5
