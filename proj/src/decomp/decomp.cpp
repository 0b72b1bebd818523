#include "a5/decomp/decomp.hpp"

#include "a5/common/error.hpp"
#include "a5/exactfield/embed.hpp"

namespace a5 {

MoebiusMap normalize_element_to_scaling(const MoebiusMap& gamma) {
  const AlgebraicNumber &a = gamma.a(), &b = gamma.b(), &c = gamma.c(), &d = gamma.d();
  MoebiusMap sigma = MoebiusMap::identity();
  if (c.is_zero()) {
    if (!b.is_zero()) {
      if ((a - d).is_zero()) fail(ErrorKind::ParabolicElement, "translation has a single fixed point");
      // finite fixed point: a p + b = d p
      const AlgebraicNumber p = b / (d - a);
      sigma = MoebiusMap(1, -p, 0, 1);
    }
  } else {
    // c x^2 + (d - a) x - b = 0
    const AlgebraicNumber disc = (d - a) * (d - a) + AlgebraicNumber(4) * b * c;
    if (disc.is_zero()) fail(ErrorKind::ParabolicElement, "element has a single fixed point");
    const auto root = sqrt(disc);
    if (!root) fail(ErrorKind::FixedPointsOutsideField, "fixed points are not in Q(zeta_60)");
    const AlgebraicNumber two_c = AlgebraicNumber(2) * c;
    const AlgebraicNumber p1 = (a - d + *root) / two_c;
    const AlgebraicNumber p2 = (a - d - *root) / two_c;
    sigma = MoebiusMap(1, -p1, 1, -p2);
  }
  const int m = gamma.order();
  if (m < 2) fail(ErrorKind::InvalidArgument, "element must have finite order >= 2");
  const MoebiusMap conj = sigma * gamma * sigma.inverse();
  if (!conj.b().is_zero() || !conj.c().is_zero())
    fail(ErrorKind::InconsistentData, "conjugated element is not a scaling");
  if (root_of_unity_order(conj.a() / conj.d()) != m)
    fail(ErrorKind::InconsistentData, "scaling factor is not a primitive root of the element order");
  return sigma;
}

MoebiusGroup conjugate_group(const MoebiusGroup& g, const MoebiusMap& s) {
  const MoebiusMap si = s.inverse();
  std::vector<MoebiusMap> out;
  for (const auto& e : g.elements()) out.push_back(s * e * si);
  return MoebiusGroup(std::move(out));
}

MoebiusMap cayley_sigma() {
  const AlgebraicNumber i = AlgebraicNumber::i();
  return {i, 1, -i, 1};
}

namespace {

using GP = GaussianPoly;

Gaussian gi(long re, long im) { return Gaussian(Rational(re), Rational(im)); }

// Polynomial in x^2: terms[k] multiplies x^(2k).
GP even(std::initializer_list<Gaussian> terms) {
  std::vector<Gaussian> c;
  for (const auto& t : terms) {
    c.push_back(t);
    c.push_back(Gaussian());
  }
  return GP(std::move(c));
}

}  // namespace

GaussianPoly rbar() {
  static const GP r = even({gi(-7, -24), 0, gi(-210, 280), 0, 25}) *
                      even({gi(-9, 12), gi(10, 20), 15}) *
                      even({gi(-7, -24), gi(-660, -120), gi(1110, -1480), gi(300, 600), 25});
  return r;
}

GaussianPoly sbar() {
  static const GP s = even({-1, 1}) * even({gi(3, -4), 5}) *
                      even({gi(-7, -24), gi(220, 40), gi(630, -840), gi(-100, -200), 25});
  return s;
}

GaussianPoly tbar() {
  static const GP t = GP::x() * even({1, 10, 5}) * even({5, 10, 1}) * even({gi(-7, -24), gi(-150, 200), 125}) *
                      even({gi(-7, -24), gi(-30, 40), 5}) * even({gi(3, -4), 0, 5}) *
                      even({gi(-27, 36), gi(-10, -20), 5}) * even({gi(-3, 4), gi(-10, -20), 45});
  return t;
}

GaussianFunction phi1() {
  static const GaussianFunction result = [] {
    const GaussianFunction base = rational_function_cast<Gaussian>(phi());
    const Gaussian i = Gaussian::i();
    // sigma^-1 = (x - 1) / (i x + i)
    const GaussianFunction inv = GaussianFunction::moebius(1, -1, i, i);
    GaussianFunction f = base.compose(inv);
    const GaussianFunction reference(pow(rbar(), 3) * Gaussian(64), pow(sbar(), 5), GaussianFunction::Coprime{});
    for (int k = 0; k <= f.degree(); ++k) {
      if (!(f.num().coeff(k) == reference.num().coeff(k)))
        fail(ErrorKind::FactorMismatch, "phi1 numerator differs from 64 Rbar^3 at x^" + std::to_string(k));
      if (!(f.den().coeff(k) == reference.den().coeff(k)))
        fail(ErrorKind::FactorMismatch, "phi1 denominator differs from Sbar^5 at x^" + std::to_string(k));
    }
    return f;
  }();
  return result;
}

TbarRelation check_tbar_relation(const Gaussian& claimed) {
  TbarRelation out;
  const GP lhs = pow(rbar(), 3) * Gaussian(64) - pow(sbar(), 5) * Gaussian(1728);
  const GP t2 = pow(tbar(), 2);
  const Gaussian c = lhs.leading() / t2.leading();
  out.proportional = lhs.degree() == t2.degree() && lhs == t2 * c;
  if (out.proportional) out.constant = c;
  const GP rhs = t2 * claimed;
  for (int k = 0; k <= std::max(lhs.degree(), rhs.degree()); ++k)
    if (!(lhs.coeff(k) == rhs.coeff(k))) {
      out.first_mismatch = k;
      break;
    }
  out.matches_claim = out.first_mismatch < 0;
  return out;
}

InnerCheck check_inner(InnerKind kind) {
  InnerCheck out;
  out.inner = kind;
  auto record = [&](const auto& dec) {
    if (dec) {
      out.found = true;
      out.outer_degree = dec->outer.degree();
      out.outer_json = rational_function_to_json(dec->outer, "y");
    }
  };
  switch (kind) {
    case InnerKind::X5:
      record(left_factor(phi(), QFunction(Poly<Rational>::monomial(Rational(1), 5))));
      break;
    case InnerKind::X2:
      record(left_factor(phi1(), GaussianFunction(GP::monomial(Gaussian(1), 2))));
      break;
    case InnerKind::X3: {
      const MoebiusGroup g = build_a5();
      const MoebiusMap* gamma = nullptr;
      for (const auto& e : g.elements())
        if (e.order() == 3) {
          gamma = &e;
          break;
        }
      const MoebiusMap sigma = normalize_element_to_scaling(*gamma);
      const CycloFunction f = rational_function_cast<AlgebraicNumber>(phi()).compose(sigma.inverse().as_rational_function());
      record(left_factor(f, CycloFunction(Poly<AlgebraicNumber>::monomial(AlgebraicNumber(1), 3))));
      break;
    }
  }
  return out;
}

}  // namespace a5
