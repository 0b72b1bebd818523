#include "a5/exactfield/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "a5/common/error.hpp"
#include "a5/exactfield/integer.hpp"
#include "a5/polyring/poly.hpp"

namespace a5 {
namespace {

constexpr int N = AlgebraicNumber::kDegree;

// x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1 (mod Phi_60), applied from the top down.
void reduce_in_place(std::vector<Integer>& t) {
  for (int k = static_cast<int>(t.size()) - 1; k >= N; --k) {
    if (sgn(t[k]) == 0) continue;
    const Integer c = t[k];
    t[k - 2] -= c;
    t[k - 6] += c;
    t[k - 8] += c;
    t[k - 10] += c;
    t[k - 14] -= c;
    t[k - 16] -= c;
    t[k] = 0;
  }
}

Poly<Rational> phi60() {
  std::vector<Rational> c(17, Rational(0));
  c[16] = c[14] = c[2] = c[0] = 1;
  c[10] = c[8] = c[6] = -1;
  return Poly<Rational>(std::move(c));
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& q) {
  num_[0] = q.num();
  den_ = q.den();
}

AlgebraicNumber AlgebraicNumber::from_coefficients(const std::array<Rational, kDegree>& c) {
  AlgebraicNumber r;
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
  for (int j = 0; j < N; ++j) r.num_[j] = c[j].num() * (l / c[j].den());
  r.den_ = l;
  r.normalize();
  return r;
}

AlgebraicNumber AlgebraicNumber::zeta_power(long k) {
  k %= kConductor;
  if (k < 0) k += kConductor;
  std::vector<Integer> t(kConductor);
  t[k] = 1;
  reduce_in_place(t);
  AlgebraicNumber r;
  for (int j = 0; j < N; ++j) r.num_[j] = t[j];
  return r;
}

Rational AlgebraicNumber::coefficient(int j) const {
  if (j < 0 || j >= N) fail(ErrorKind::InvalidArgument, "coefficient index out of range");
  return Rational(num_[j], den_);
}

std::array<Rational, AlgebraicNumber::kDegree> AlgebraicNumber::coefficients() const {
  std::array<Rational, kDegree> r;
  for (int j = 0; j < N; ++j) r[j] = Rational(num_[j], den_);
  return r;
}

bool AlgebraicNumber::is_zero() const noexcept {
  for (const auto& v : num_)
    if (sgn(v) != 0) return false;
  return true;
}

bool AlgebraicNumber::is_rational() const noexcept {
  for (int j = 1; j < N; ++j)
    if (sgn(num_[j]) != 0) return false;
  return true;
}

Rational AlgebraicNumber::to_rational() const {
  if (!is_rational()) fail(ErrorKind::InvalidArgument, "algebraic number is not rational");
  return Rational(num_[0], den_);
}

void AlgebraicNumber::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& v : num_)
      if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  if (den_ == o.den_) {
    for (int j = 0; j < N; ++j) num_[j] += o.num_[j];
  } else {
    for (int j = 0; j < N; ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  if (den_ == o.den_) {
    for (int j = 0; j < N; ++j) num_[j] -= o.num_[j];
  } else {
    for (int j = 0; j < N; ++j) num_[j] = num_[j] * o.den_ - o.num_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

AlgebraicNumber operator-(AlgebraicNumber a) {
  for (auto& v : a.num_) v = -v;
  return a;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  if (o.is_rational()) return *this *= Rational(o.num_[0], o.den_);
  if (is_rational()) {
    const Rational q(num_[0], den_);
    *this = o;
    return *this *= q;
  }
  std::vector<Integer> t(2 * N - 1);
  for (int i = 0; i < N; ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (int j = 0; j < N; ++j)
      if (sgn(o.num_[j]) != 0) mpz_addmul(t[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  reduce_in_place(t);
  for (int j = 0; j < N; ++j) num_[j].swap(t[j]);
  den_ *= o.den_;
  normalize();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const Rational& q) {
  if (q.is_zero()) return *this = AlgebraicNumber();
  const Integer p = q.num();
  if (p != 1)
    for (auto& v : num_) v *= p;
  den_ *= q.den();
  normalize();
  return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_60)");
  if (is_rational()) return AlgebraicNumber(Rational(num_[0], den_).inverse());
  std::vector<Rational> c(N);
  for (int j = 0; j < N; ++j) c[j] = Rational(num_[j]);
  const auto eg = extended_gcd(Poly<Rational>(std::move(c)), phi60());
  // s * (den * self) = 1 (mod Phi_60)
  std::array<Rational, N> r;
  for (int j = 0; j < N; ++j) r[j] = eg.s.coeff(j) * Rational(den_);
  return from_coefficients(r);
}

AlgebraicNumber AlgebraicNumber::galois(int k) const {
  k %= kConductor;
  if (k < 0) k += kConductor;
  if (std::gcd(k, kConductor) != 1) fail(ErrorKind::InvalidArgument, "galois exponent not a unit mod 60");
  std::vector<Integer> t(kConductor);
  for (int j = 0; j < N; ++j) t[(j * k) % kConductor] += num_[j];
  reduce_in_place(t);
  AlgebraicNumber r;
  for (int j = 0; j < N; ++j) r.num_[j].swap(t[j]);
  r.den_ = den_;
  r.normalize();
  return r;
}

std::complex<long double> AlgebraicNumber::approximate() const {
  std::complex<long double> acc = 0;
  for (int j = 0; j < N; ++j) {
    if (sgn(num_[j]) == 0) continue;
    const long double ang = 2.0L * std::numbers::pi_v<long double> * j / kConductor;
    const long double c = static_cast<long double>(mpq_class(num_[j], den_).get_d());
    acc += std::complex<long double>(c * std::cos(ang), c * std::sin(ang));
  }
  return acc;
}

std::string to_string(const AlgebraicNumber& a) {
  if (a.is_rational()) return a.to_rational().str();
  std::string out;
  for (int j = 0; j < AlgebraicNumber::kDegree; ++j) {
    const Rational c = a.coefficient(j);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c.str();
    if (j > 0) out += "*z^" + std::to_string(j);
  }
  return out;
}

AlgebraicNumber pow(const AlgebraicNumber& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  AlgebraicNumber r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

int sign_of_real(const AlgebraicNumber& real_elt) {
  if (real_elt.is_zero()) return 0;
  long double mag = 0;
  for (int j = 0; j < AlgebraicNumber::kDegree; ++j)
    mag += std::fabs(static_cast<long double>(real_elt.coefficient(j).to_double()));
  const long double v = real_elt.approximate().real();
  if (std::fabs(v) <= 1e-12L * mag)
    fail(ErrorKind::InconsistentData, "sign determination below working precision");
  return v > 0 ? 1 : -1;
}

// Chain {1} = H0 < H1 < ... < H4 = (Z/60)^*, each of index 2 in the next;
// generator[j] is an element of H_{j+1} outside H_j.
struct GaloisTower {
  std::vector<std::vector<int>> subgroup;
  std::vector<int> generator;
  std::vector<AlgebraicNumber> antiinvariant;  // theta_j: generator[j] negates it, H_j fixes it

  GaloisTower() {
    std::vector<int> units;
    for (int k = 1; k < 60; ++k)
      if (std::gcd(k, 60) == 1) units.push_back(k);
    std::vector<int> h{1};
    subgroup.push_back(h);
    while (h.size() < units.size()) {
      for (int g : units) {
        if (std::find(h.begin(), h.end(), g) != h.end()) continue;
        if (std::find(h.begin(), h.end(), (g * g) % 60) == h.end()) continue;
        std::vector<int> next = h;
        for (int x : h) next.push_back((x * g) % 60);
        std::sort(next.begin(), next.end());
        generator.push_back(g);
        h = next;
        subgroup.push_back(h);
        break;
      }
    }
    for (std::size_t j = 0; j < generator.size(); ++j) {
      for (int k = 1; k < 60; ++k) {
        const AlgebraicNumber y = AlgebraicNumber::zeta_power(k);
        AlgebraicNumber t;
        for (int s : subgroup[j]) t += y.galois(s);
        const AlgebraicNumber th = t - t.galois(generator[j]);
        if (!th.is_zero()) {
          antiinvariant.push_back(th);
          break;
        }
      }
    }
  }
};

const GaloisTower& tower() {
  static const GaloisTower t;
  return t;
}

std::optional<AlgebraicNumber> sqrt_at_level(const AlgebraicNumber& delta, std::size_t level) {
  const GaloisTower& tw = tower();
  if (delta.is_zero()) return AlgebraicNumber();
  if (level == tw.generator.size()) {
    const Rational q = delta.to_rational();
    if (!is_perfect_square(q)) return std::nullopt;
    return AlgebraicNumber(exact_sqrt(q));
  }
  const int tau = tw.generator[level];
  const Rational half(1, 2);
  const AlgebraicNumber conj = delta.galois(tau);
  const AlgebraicNumber p = (delta + conj) * half;
  const AlgebraicNumber q = (delta - conj) * half;
  if (q.is_zero()) {
    if (auto r = sqrt_at_level(delta, level + 1)) return r;
    const AlgebraicNumber& theta = tw.antiinvariant[level];
    const AlgebraicNumber m = theta * theta;
    if (auto r = sqrt_at_level(delta / m, level + 1)) return *r * theta;
    return std::nullopt;
  }
  const auto n = sqrt_at_level(p * p - q * q, level + 1);
  if (!n) return std::nullopt;
  for (int sgn_choice : {1, -1}) {
    const AlgebraicNumber a2 = (p + *n * Rational(sgn_choice)) * half;
    if (a2.is_zero()) continue;
    const auto a = sqrt_at_level(a2, level + 1);
    if (!a) continue;
    const AlgebraicNumber beta = *a + q / (*a * Rational(2));
    if (beta * beta == delta) return beta;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AlgebraicNumber> sqrt(const AlgebraicNumber& a) { return sqrt_at_level(a, 0); }

int imag_sign(const AlgebraicNumber& a) {
  // Im(a) = (a - conj a) / (2i), a real element of the field.
  const AlgebraicNumber im = (a - a.conj()) * AlgebraicNumber::i() * Rational(-1, 2);
  return sign_of_real(im);
}

int real_sign(const AlgebraicNumber& a) { return sign_of_real((a + a.conj()) * Rational(1, 2)); }

int root_of_unity_order(const AlgebraicNumber& a) {
  AlgebraicNumber p = a;
  for (int k = 1; k <= AlgebraicNumber::kConductor; ++k) {
    if (p == AlgebraicNumber(1)) return k;
    p *= a;
  }
  return 0;
}

}  // namespace a5
