#pragma once

#include <optional>
#include <vector>

#include "a5/exactfield/cyclotomic.hpp"
#include "a5/families/families.hpp"

namespace a5 {

template <FieldElement F>
struct DihedralInvariants {
  int d = 0;
  std::vector<F> u;  // u[k] holds u_(k+1), k = 0..d-2
  const F& operator()(int i) const { return u.at(i - 1); }
};

/// u_i = (b1/b0)^(d-i)(bi/b0)(b0/bd) + (b_(d-1)/b0)^(d-i)(b_(d-i)/b0)(b0/bd)^(d-i).
template <FieldElement F>
DihedralInvariants<F> dihedral_invariants(const std::vector<F>& b) {
  const int d = static_cast<int>(b.size()) - 1;
  if (d < 2) fail(ErrorKind::InvalidArgument, "need at least three coefficients");
  if (is_zero(b[0]) || is_zero(b[d]))
    fail(ErrorKind::DegenerateLeadingOrTrailing, "b_0 and b_d must be nonzero");
  const F one(Rational(1));
  const F inv0 = one / b[0];
  const F r1 = b[1] * inv0, rl = b[d - 1] * inv0, rd = b[0] / b[d];
  // powers up to d-1
  std::vector<F> p1{one}, pl{one}, pd{one};
  for (int k = 1; k < d; ++k) {
    p1.push_back(p1.back() * r1);
    pl.push_back(pl.back() * rl);
    pd.push_back(pd.back() * rd);
  }
  DihedralInvariants<F> out{d, {}};
  for (int i = 1; i < d; ++i)
    out.u.push_back(p1[d - i] * (b[i] * inv0) * rd + pl[d - i] * (b[d - i] * inv0) * pd[d - i]);
  return out;
}

enum class GroupRelation { Z2xA5, SL2_5, Neither };
std::string to_string(GroupRelation r);

/// 2^((d-2)/2) u_1 -+ u_(d-1)^(d/2) = 0 ("-" for Z2xA5, "+" for SL2_5).
template <FieldElement F>
GroupRelation check_group_relation(const DihedralInvariants<F>& u, int g) {
  const int d = u.d;
  if (d % 2 || (d != g + 1 && d != g)) return GroupRelation::Neither;
  F lhs(Rational(pow(Rational(2), (d - 2) / 2)));
  lhs = lhs * u(1);
  F rhs(Rational(1));
  for (int k = 0; k < d / 2; ++k) rhs = rhs * u(d - 1);
  if (lhs == rhs) return GroupRelation::Z2xA5;
  if (is_zero(lhs + rhs)) return GroupRelation::SL2_5;
  return GroupRelation::Neither;
}

/// b_i as affine functions of (s_1..s_delta) for the x2 model of a case:
/// affine[i][0] is the constant part, affine[i][k] the coefficient of s_k.
std::vector<std::vector<Gaussian>> even_coefficients_in_s(const CaseDescriptor& cs);

/// tau^2 = b0 b_(D-1) / (rho b_D b_1) for the x2 family of the case, with rho the root of unity
/// realizing a_i rho^i = a_(D-i) in the normal form; constant along the family.
struct NormalFormScaling {
  AlgebraicNumber rho;
  AlgebraicNumber tau2;
};
NormalFormScaling normal_form_scaling(const CaseDescriptor& cs);

/// Recovers (s_1..s_delta) from the dihedral invariants of an x2-model curve of the case.
std::vector<AlgebraicNumber> symmetric_from_dihedral(const DihedralInvariants<AlgebraicNumber>& u,
                                                     const CaseDescriptor& cs);

}  // namespace a5
