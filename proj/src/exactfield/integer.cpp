#include "a5/exactfield/integer.hpp"

#include <algorithm>
#include <map>

#include "a5/common/error.hpp"

namespace a5 {
namespace {

constexpr unsigned long kTrialBound = 100000;
constexpr unsigned long kRhoIterations = 1UL << 22;

// Brent's cycle detection on x -> x^2 + c mod n; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long c_seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const Integer c = c_seed;
  Integer y = 2 + c_seed, x, ys, q = 1, g = 1, t;
  unsigned long r = 1;
  const unsigned long m = 128;
  unsigned long total = 0;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1 && total < kRhoIterations) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        t = x - y;
        q = q * abs(t);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      total += lim;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      t = x - ys;
      t = abs(t);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n || g == 1) return 0;
  return g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, bool& complete) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    split_into(r, out, complete);
    split_into(r, out, complete);
    return;
  }
  for (unsigned long c = 1; c <= 8; ++c) {
    const Integer f = pollard_brent(n, c);
    if (f != 0) {
      split_into(f, out, complete);
      split_into(n / f, out, complete);
      return;
    }
  }
  complete = false;
  ++out[n];
}

}  // namespace

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_perfect_square(const Rational& q) {
  return q.sign() >= 0 && is_perfect_square(q.num()) && is_perfect_square(q.den());
}

Rational exact_sqrt(const Rational& q) {
  if (!is_perfect_square(q)) fail(ErrorKind::InvalidArgument, "not a rational square: " + q.str());
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), q.value().get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.value().get_den_mpz_t());
  return Rational(a, b);
}

Factorization factor(const Integer& n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor zero");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) split_into(m, found, result.complete);
  result.factors.assign(found.begin(), found.end());
  return result;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  const Factorization f = factor(n);
  SquarefreeSplit s{f.sign, 1, f.complete};
  for (const auto& [p, e] : f.factors) {
    if (e % 2) s.squarefree *= p;
    for (unsigned k = 0; k < e / 2; ++k) s.square *= p;
  }
  return s;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace a5
