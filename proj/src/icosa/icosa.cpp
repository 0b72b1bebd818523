#include "a5/icosa/icosa.hpp"

#include <algorithm>

#include "a5/common/error.hpp"
#include "a5/polyring/linalg.hpp"

namespace a5 {

MoebiusGroup::MoebiusGroup(std::vector<MoebiusMap> elements) : elements_(std::move(elements)) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t k = 0; k < elements_.size(); ++k) keys.emplace_back(elements_[k].key(), k);
  std::sort(keys.begin(), keys.end());
  std::vector<MoebiusMap> sorted;
  for (const auto& [key, k] : keys) sorted.push_back(elements_[k]);
  elements_ = std::move(sorted);
}

int MoebiusGroup::index_of(const MoebiusMap& m) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k] == m) return static_cast<int>(k);
  return -1;
}

bool MoebiusGroup::contains(const MoebiusMap& m) const { return index_of(m) >= 0; }

std::map<int, int> MoebiusGroup::order_profile() const {
  std::map<int, int> profile;
  for (const auto& e : elements_) ++profile[e.order(static_cast<int>(elements_.size()))];
  return profile;
}

std::vector<MoebiusMap> MoebiusGroup::generators() const {
  std::vector<MoebiusMap> gens;
  std::size_t reached = 1;
  for (const auto& e : elements_) {
    if (reached == elements_.size()) break;
    if (e.is_identity()) continue;
    auto trial = gens;
    trial.push_back(e);
    const std::size_t n = generate_group(trial, elements_.size()).size();
    if (n > reached) {
      gens = std::move(trial);
      reached = n;
    }
  }
  return gens;
}

MoebiusGroup generate_group(const std::vector<MoebiusMap>& gens, std::size_t limit) {
  std::vector<MoebiusMap> elems{MoebiusMap::identity()};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      const MoebiusMap p = elems[k] * g;
      if (std::find(elems.begin(), elems.end(), p) != elems.end()) continue;
      elems.push_back(p);
      if (elems.size() > limit) fail(ErrorKind::InvalidArgument, "group generation exceeded the size limit");
    }
  }
  return MoebiusGroup(std::move(elems));
}

MoebiusMap sigma1() {
  const AlgebraicNumber w = AlgebraicNumber::omega();
  return {w, 1, 1, -w};
}

MoebiusMap sigma2() { return {AlgebraicNumber::zeta_power(24), 0, 0, 1}; }

MoebiusGroup build_a5() { return generate_group({sigma1(), sigma2()}); }

namespace {

// Removes the common factors of num/den when den is a product of known linear factors (x - r).
CycloFunction reduce_against_roots(Poly<AlgebraicNumber> num, Poly<AlgebraicNumber> den,
                                   const std::vector<AlgebraicNumber>& roots) {
  const AlgebraicNumber one(1);
  for (const auto& r : roots) {
    if (num.is_zero()) break;
    if (!num(r).is_zero() || !den(r).is_zero()) continue;
    const Poly<AlgebraicNumber> lin{-r, one};
    num = exact_quotient(num, lin);
    den = exact_quotient(den, lin);
  }
  return CycloFunction(std::move(num), std::move(den), CycloFunction::Coprime{});
}

}  // namespace

std::vector<CycloFunction> symmetric_generators(const MoebiusGroup& g) {
  using P = Poly<AlgebraicNumber>;
  // prod_g ((c x + d) t - (a x + b)) = D(x) prod_g (t - g(x)), coefficients indexed by t-degree.
  std::vector<P> coef{P(AlgebraicNumber(1))};
  std::vector<AlgebraicNumber> poles;
  for (const auto& e : g.elements()) {
    const P l1{e.d(), e.c()};
    const P l0{e.b(), e.a()};
    if (!e.c().is_zero()) poles.push_back(-e.d() / e.c());
    std::vector<P> next(coef.size() + 1);
    for (std::size_t j = 0; j < coef.size(); ++j) {
      next[j + 1] += coef[j] * l1;
      next[j] -= coef[j] * l0;
    }
    coef = std::move(next);
  }
  const std::size_t n = g.size();
  const P& den = coef[n];
  std::vector<CycloFunction> out;
  for (std::size_t i = 1; i <= n; ++i) {
    P num = coef[n - i];
    if (i % 2) num = -num;
    out.push_back(reduce_against_roots(std::move(num), den, poles));
  }
  return out;
}

CycloFunction symmetric_generator(const MoebiusGroup& g, int i) {
  if (i < 1 || i > static_cast<int>(g.size())) fail(ErrorKind::InvalidArgument, "symmetric function index out of range");
  return symmetric_generators(g)[i - 1];
}

Poly<Rational> icosa_R() {
  std::vector<Rational> c(21, Rational(0));
  c[20] = 1;
  c[15] = -228;
  c[10] = 494;
  c[5] = 228;
  c[0] = 1;
  return Poly<Rational>(std::move(c));
}

Poly<Rational> icosa_S() {
  std::vector<Rational> c(12, Rational(0));
  c[11] = 1;
  c[6] = 11;
  c[1] = -1;
  return Poly<Rational>(std::move(c));
}

Poly<Rational> icosa_T() {
  std::vector<Rational> c(31, Rational(0));
  c[30] = 1;
  c[25] = 522;
  c[20] = -10005;
  c[10] = -10005;
  c[5] = -522;
  c[0] = 1;
  return Poly<Rational>(std::move(c));
}

QFunction phi() {
  const Poly<Rational> r = icosa_R(), s = icosa_S();
  return QFunction(-pow(r, 3), pow(s, 5), QFunction::Coprime{});
}

IdentityCheck verify_icosahedral_identity() {
  const Poly<Rational> r = icosa_R(), s = icosa_S(), t = icosa_T();
  const Poly<Rational> lhs = t * t;
  const Poly<Rational> rhs = pow(r, 3) + pow(s, 5) * Rational(1728);
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= top; ++k)
    if (!(lhs.coeff(k) == rhs.coeff(k)))
      fail(ErrorKind::IdentityFailed, "T^2 - R^3 - 1728 S^5 has nonzero coefficient at x^" + std::to_string(k));
  return {true, top};
}

bool orbit_invariance_check(const MoebiusGroup& g, const CycloFunction& f) {
  for (const auto& h : g.generators())
    if (!(f.compose(h.as_rational_function()) == f)) return false;
  return true;
}

std::optional<MoebiusMap> moebius_relation(const CycloFunction& s, const CycloFunction& f) {
  using P = Poly<AlgebraicNumber>;
  // a (D Psi) + b (D Upsilon) - c (N Psi) - d (N Upsilon) = 0 with s = N/D, f = Psi/Upsilon.
  const std::vector<P> cols{s.den() * f.num(), s.den() * f.den(), -(s.num() * f.num()), -(s.num() * f.den())};
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  Matrix<AlgebraicNumber> m(rows, std::vector<AlgebraicNumber>(4));
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < 4; ++k) m[r][k] = cols[k].coeff(r);
  const auto basis = nullspace(std::move(m), 4);
  if (basis.size() != 1) return std::nullopt;
  const auto& v = basis[0];
  if ((v[0] * v[3] - v[1] * v[2]).is_zero()) return std::nullopt;
  return MoebiusMap(v[0], v[1], v[2], v[3]);
}

}  // namespace a5
