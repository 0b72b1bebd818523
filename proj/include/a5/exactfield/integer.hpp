#pragma once

#include <utility>
#include <vector>

#include "a5/exactfield/rational.hpp"

namespace a5 {

struct Factorization {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;  // ascending primes (or unsplit cofactors)
  bool complete = true;                               // false when a composite cofactor resisted splitting
};

/// Factors |n| by trial division, Miller-Rabin and Pollard-Brent rho.
Factorization factor(const Integer& n);

/// n = squarefree * square^2, squarefree carrying the sign of n.
struct SquarefreeSplit {
  Integer squarefree;
  Integer square;
  bool certified = true;
};
SquarefreeSplit squarefree_split(const Integer& n);

bool is_probable_prime(const Integer& n);
bool is_perfect_square(const Integer& n);
bool is_perfect_square(const Rational& q);
/// Exact square root of a perfect square rational; throws InvalidArgument otherwise.
Rational exact_sqrt(const Rational& q);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace a5
