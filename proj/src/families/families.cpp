#include "a5/families/families.hpp"

#include "a5/common/error.hpp"
#include "a5/common/parallel.hpp"
#include "a5/icosa/icosa.hpp"

namespace a5 {

std::string to_string(AutGroup g) { return g == AutGroup::Z2xA5 ? "Z2xA5" : "SL2_5"; }

std::string to_string(Model m) {
  switch (m) {
    case Model::X: return "x";
    case Model::X2: return "x2";
    case Model::X5: return "x5";
  }
  return "x";
}

std::string to_string(Multiplier m) {
  switch (m) {
    case Multiplier::T: return "T";
    case Multiplier::R: return "R";
    case Multiplier::S: return "S";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "x5") return Model::X5;
  if (s == "x2") return Model::X2;
  if (s == "x") return Model::X;
  fail(ErrorKind::InvalidArgument, "unknown model '" + s + "' (expected x5 or x2)");
}

int case_offset(int case_no) {
  static constexpr int offsets[] = {-1, 5, 15, 9, 14, 20, 24, 30};
  if (case_no < 1 || case_no > 8) fail(ErrorKind::InvalidArgument, "case number must be in 1..8");
  return offsets[case_no - 1];
}

CaseDescriptor case_descriptor(int case_no, int delta) {
  using M = Multiplier;
  static const std::vector<std::vector<M>> mults = {{}, {M::S}, {M::S, M::R}, {M::R},
                                                    {M::T}, {M::T, M::S}, {M::T, M::R}, {M::T, M::R, M::S}};
  if (delta < 0) fail(ErrorKind::InvalidArgument, "delta must be nonnegative");
  CaseDescriptor d;
  d.case_no = case_no;
  d.genus = 30 * delta + case_offset(case_no);
  d.delta = delta;
  d.group = case_no <= 4 ? AutGroup::Z2xA5 : AutGroup::SL2_5;
  d.multipliers = mults[case_no - 1];
  if (d.genus < 2) fail(ErrorKind::NotInLocus, "case " + std::to_string(case_no) + " needs a larger delta");
  return d;
}

CaseDescriptor classify_genus(int g) {
  if (g < 2) fail(ErrorKind::NotInLocus, "genus must be at least 2");
  for (int c = 1; c <= 8; ++c) {
    const int r = g - case_offset(c);
    if (r >= 0 && r % 30 == 0) return case_descriptor(c, r / 30);
  }
  fail(ErrorKind::NotInLocus, "genus " + std::to_string(g) + " admits no A5 reduced automorphism group");
}

Poly<Rational> lambda_factor_x5(const Rational& lambda) {
  if (lambda.is_zero() || lambda == Rational(1728))
    fail(ErrorKind::DegenerateBranchValue, "lambda = " + lambda.str() + " is a branch value of phi");
  static const Poly<Rational> r3 = pow(icosa_R(), 3), s5 = pow(icosa_S(), 5);
  return -r3 - s5 * lambda;
}

GaussianPoly lambda_factor_x2(const Gaussian& lambda) {
  if (lambda.is_zero() || lambda == Gaussian(1728))
    fail(ErrorKind::DegenerateBranchValue, "lambda = " + to_string(lambda) + " is a branch value of phi1");
  static const GaussianPoly r3 = pow(rbar(), 3) * Gaussian(64), s5 = pow(sbar(), 5);
  return r3 - s5 * lambda;
}

namespace {

template <class F, class Factor, class Mult>
CurveModel<F> build_curve(int g, const std::vector<F>& lambdas, Model model, Factor&& factor, Mult&& multiplier) {
  const CaseDescriptor cs = classify_genus(g);
  if (static_cast<int>(lambdas.size()) != cs.delta)
    fail(ErrorKind::InvalidArgument, "genus " + std::to_string(g) + " needs " + std::to_string(cs.delta) +
                                         " branch values, got " + std::to_string(lambdas.size()));
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lambdas[i] == lambdas[j]) fail(ErrorKind::DuplicateBranchValue, "branch values must be distinct");
  const auto factors = parallel_map(lambdas.size(), [&](std::size_t k) { return factor(lambdas[k]); });
  Poly<F> f(F(Rational(1)));
  for (const auto& p : factors) f *= p;
  for (auto m : cs.multipliers) f *= multiplier(m);
  if (f.degree() != 2 * g + 1 && f.degree() != 2 * g + 2)
    fail(ErrorKind::InconsistentData, "curve degree " + std::to_string(f.degree()) + " does not match genus");
  return CurveModel<F>{std::move(f), g, model, cs, lambdas};
}

}  // namespace

CurveModel<Rational> curve_equation_x5(int g, const std::vector<Rational>& lambdas) {
  return build_curve(g, lambdas, Model::X5, lambda_factor_x5, [](Multiplier m) {
    switch (m) {
      case Multiplier::T: return icosa_T();
      case Multiplier::R: return icosa_R();
      case Multiplier::S: return icosa_S();
    }
    return Poly<Rational>(1);
  });
}

CurveModel<Gaussian> curve_equation_x2(int g, const std::vector<Gaussian>& lambdas) {
  return build_curve(g, lambdas, Model::X2, lambda_factor_x2, [](Multiplier m) {
    switch (m) {
      case Multiplier::T: return tbar();
      case Multiplier::R: return rbar();
      case Multiplier::S: return sbar();
    }
    return GaussianPoly(1);
  });
}

}  // namespace a5
