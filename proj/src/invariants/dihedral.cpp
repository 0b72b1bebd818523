#include "a5/invariants/dihedral.hpp"

#include "a5/common/error.hpp"
#include "a5/decomp/decomp.hpp"
#include "a5/polyring/linalg.hpp"

namespace a5 {

std::string to_string(GroupRelation r) {
  switch (r) {
    case GroupRelation::Z2xA5: return "Z2xA5";
    case GroupRelation::SL2_5: return "SL2_5";
    case GroupRelation::Neither: return "neither";
  }
  return "neither";
}

std::vector<std::vector<Gaussian>> even_coefficients_in_s(const CaseDescriptor& cs) {
  const GaussianPoly psi = pow(rbar(), 3) * Gaussian(64), ups = pow(sbar(), 5);
  GaussianPoly mult(Gaussian(1));
  for (auto m : cs.multipliers) mult *= (m == Multiplier::T ? tbar() : m == Multiplier::R ? rbar() : sbar());
  const int delta = cs.delta;
  std::vector<std::vector<Gaussian>> parts;  // parts[k] = even model of (-1)^k psi^(delta-k) ups^k mult
  for (int k = 0; k <= delta; ++k) {
    GaussianPoly p = pow(psi, delta - k) * pow(ups, k) * mult;
    if (k % 2) p = -p;
    parts.push_back(even_model(p));
  }
  std::size_t len = 0;
  for (const auto& p : parts) len = std::max(len, p.size());
  std::vector<std::vector<Gaussian>> affine(len, std::vector<Gaussian>(delta + 1));
  for (int k = 0; k <= delta; ++k)
    for (std::size_t i = 0; i < parts[k].size(); ++i) affine[i][k] = parts[k][i];
  return affine;
}

namespace {

std::vector<AlgebraicNumber> evaluate_affine(const std::vector<std::vector<Gaussian>>& affine,
                                             const std::vector<AlgebraicNumber>& s) {
  std::vector<AlgebraicNumber> b;
  for (const auto& row : affine) {
    AlgebraicNumber v = row[0].to_algebraic();
    for (std::size_t k = 1; k < row.size(); ++k) v += row[k].to_algebraic() * s[k - 1];
    b.push_back(v);
  }
  return b;
}

// Elementary symmetric functions of the given values.
std::vector<AlgebraicNumber> elementary(const std::vector<Rational>& lambdas) {
  std::vector<AlgebraicNumber> e{AlgebraicNumber(1)};
  for (const auto& l : lambdas) {
    e.push_back(AlgebraicNumber());
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * l;
  }
  e.erase(e.begin());
  return e;
}

bool symmetric_under(const std::vector<AlgebraicNumber>& b, const AlgebraicNumber& rho, const AlgebraicNumber& tau2) {
  const int dd = static_cast<int>(b.size()) - 1;
  // b_i rho^i = b_(D-i) (tau^2)^(D/2 - i)
  for (int i = 0; i <= dd; ++i)
    if (!(b[i] * pow(rho, i) == b[dd - i] * pow(tau2, dd / 2 - i))) return false;
  return true;
}

}  // namespace

NormalFormScaling normal_form_scaling(const CaseDescriptor& cs) {
  const auto affine = even_coefficients_in_s(cs);
  const int dd = static_cast<int>(affine.size()) - 1;
  if (dd % 2) fail(ErrorKind::InconsistentData, "even model has odd degree");
  std::vector<std::vector<AlgebraicNumber>> refs;
  for (int shift : {2, 7}) {
    std::vector<Rational> lambdas;
    for (int j = 0; j < cs.delta; ++j) lambdas.push_back(Rational(shift + 3 * j));
    refs.push_back(evaluate_affine(affine, elementary(lambdas)));
  }
  std::vector<AlgebraicNumber> candidates{AlgebraicNumber::epsilon3()};
  for (int k = 0; k < AlgebraicNumber::kConductor; ++k) candidates.push_back(AlgebraicNumber::zeta_power(k));
  for (const auto& rho : candidates) {
    if (!(pow(rho, dd) == AlgebraicNumber(1))) continue;
    const auto& b = refs[0];
    if (b[1].is_zero()) fail(ErrorKind::SingularSystem, "reference curve has b_1 = 0");
    const AlgebraicNumber tau2 = b[0] * b[dd - 1] / (rho * b[dd] * b[1]);
    bool ok = true;
    for (const auto& r : refs) ok = ok && symmetric_under(r, rho, tau2);
    if (ok) return {rho, tau2};
  }
  fail(ErrorKind::InconsistentData, "no root of unity realizes the normal-form symmetry");
}

std::vector<AlgebraicNumber> symmetric_from_dihedral(const DihedralInvariants<AlgebraicNumber>& u,
                                                     const CaseDescriptor& cs) {
  const auto affine = even_coefficients_in_s(cs);
  const int dd = static_cast<int>(affine.size()) - 1;
  if (u.d != dd) fail(ErrorKind::InvalidArgument, "dihedral invariants do not belong to this case");
  const NormalFormScaling sc = normal_form_scaling(cs);
  const AlgebraicNumber& last = u(dd - 1);
  if (last.is_zero()) fail(ErrorKind::SingularSystem, "u_(d-1) = 0");
  const AlgebraicNumber base = sc.rho * last;
  Matrix<AlgebraicNumber> m;
  std::vector<AlgebraicNumber> rhs;
  for (int i = 2; i <= dd - 2; i += 2) {
    // a_i = 2^(i/2 - 1) u_(D-i) / (rho u_(D-1))^(i/2), and a_i b_0(s) = (tau^2)^(i/2) b_i(s)
    const AlgebraicNumber a = u(dd - i) * pow(Rational(2), i / 2 - 1) / pow(base, i / 2);
    const AlgebraicNumber t = pow(sc.tau2, i / 2);
    std::vector<AlgebraicNumber> row;
    for (int k = 1; k <= cs.delta; ++k)
      row.push_back(a * affine[0][k].to_algebraic() - t * affine[i][k].to_algebraic());
    m.push_back(std::move(row));
    rhs.push_back(-(a * affine[0][0].to_algebraic() - t * affine[i][0].to_algebraic()));
  }
  auto s = solve_unique(std::move(m), rhs);
  if (!s) fail(ErrorKind::SingularSystem, "linear system for s_1..s_delta has no unique solution");
  return *s;
}

}  // namespace a5
