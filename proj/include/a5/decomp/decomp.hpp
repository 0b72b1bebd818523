#pragma once

#include <optional>

#include "a5/exactfield/gaussian.hpp"
#include "a5/icosa/icosa.hpp"
#include "a5/polyring/json.hpp"
#include "a5/polyring/linalg.hpp"

namespace a5 {

template <FieldElement F>
struct Decomposition {
  RationalFunction<F> outer, inner, target;
};

/// g with f = g o h, found from f * den(g o h) = num(g o h) as a linear system in g's coefficients.
template <FieldElement F>
std::optional<Decomposition<F>> left_factor(const RationalFunction<F>& f, const RationalFunction<F>& h) {
  using P = Poly<F>;
  if (h.is_constant()) fail(ErrorKind::ConstantInner, "inner function is constant");
  if (f.degree() % h.degree() != 0) return std::nullopt;
  const int m = f.degree() / h.degree();
  // A^k B^(m-k) for h = A/B.
  std::vector<P> apow{P(F(Rational(1)))}, bpow{P(F(Rational(1)))};
  for (int k = 1; k <= m; ++k) {
    apow.push_back(apow.back() * h.num());
    bpow.push_back(bpow.back() * h.den());
  }
  std::vector<P> cols;
  for (int k = 0; k <= m; ++k) cols.push_back(-(f.den() * apow[k] * bpow[m - k]));
  for (int k = 0; k <= m; ++k) cols.push_back(f.num() * apow[k] * bpow[m - k]);
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  const std::size_t n = cols.size();
  Matrix<F> mat(rows, std::vector<F>(n, F(Rational(0))));
  for (int r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < n; ++k) mat[r][k] = cols[k].coeff(r);
  for (const auto& v : nullspace(std::move(mat), n)) {
    P num(std::vector<F>(v.begin(), v.begin() + m + 1));
    P den(std::vector<F>(v.begin() + m + 1, v.end()));
    if (den.is_zero()) continue;
    RationalFunction<F> g(std::move(num), std::move(den));
    if (g.is_constant() || g.degree() * h.degree() != f.degree()) continue;
    if (g.compose(h) == f) return Decomposition<F>{g, h, f};
  }
  return std::nullopt;
}

/// sigma with sigma gamma sigma^-1 = c x, sending the fixed points of gamma to 0 and infinity.
MoebiusMap normalize_element_to_scaling(const MoebiusMap& gamma);

/// { s g s^-1 : g in G }.
MoebiusGroup conjugate_group(const MoebiusGroup& g, const MoebiusMap& s);

/// (i x + 1) / (-i x + 1).
MoebiusMap cayley_sigma();

using GaussianPoly = Poly<Gaussian>;
using GaussianFunction = RationalFunction<Gaussian>;

GaussianPoly rbar();
GaussianPoly sbar();
GaussianPoly tbar();

/// phi o sigma^-1 over Q(i); FactorMismatch unless it equals 64 Rbar^3 / Sbar^5.
GaussianFunction phi1();

/// Comparison of num(phi1) - 1728 den(phi1), taken as 64 Rbar^3 - 1728 Sbar^5, against c * Tbar^2.
struct TbarRelation {
  bool proportional = false;     // 64 Rbar^3 - 1728 Sbar^5 is a constant multiple of Tbar^2
  Gaussian constant;             // that multiple, when proportional
  bool matches_claim = false;    // constant equals the claimed one
  int first_mismatch = -1;       // first coefficient where the claimed identity fails
};
TbarRelation check_tbar_relation(const Gaussian& claimed);

enum class InnerKind { X2, X3, X5 };

struct InnerCheck {
  InnerKind inner;
  int outer_degree = 0;
  bool found = false;
  nlohmann::json outer_json;
};
/// left_factor of the appropriate phi-model by x^2, x^3 or x^5.
InnerCheck check_inner(InnerKind kind);

}  // namespace a5
