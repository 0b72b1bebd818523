#pragma once

#include <array>
#include <string>
#include <vector>

#include "a5/exactfield/cyclotomic.hpp"
#include "a5/polyring/rational_function.hpp"

namespace a5 {

/// x -> (a x + b)/(c x + d) in PGL2(Q(zeta_60)), stored with its first nonzero entry equal to 1.
class MoebiusMap {
 public:
  MoebiusMap(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c, const AlgebraicNumber& d);
  static MoebiusMap identity() { return {1, 0, 0, 1}; }

  const AlgebraicNumber& a() const { return m_[0]; }
  const AlgebraicNumber& b() const { return m_[1]; }
  const AlgebraicNumber& c() const { return m_[2]; }
  const AlgebraicNumber& d() const { return m_[3]; }
  const std::array<AlgebraicNumber, 4>& entries() const { return m_; }

  bool is_identity() const { return *this == identity(); }
  MoebiusMap inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  /// Order in PGL2, or 0 when larger than `limit`.
  int order(int limit = 120) const;
  RationalFunction<AlgebraicNumber> as_rational_function() const {
    return RationalFunction<AlgebraicNumber>::moebius(m_[0], m_[1], m_[2], m_[3]);
  }
  /// Deterministic sort key.
  std::string key() const;

  /// Matrix product: (p * q)(x) = p(q(x)).
  friend MoebiusMap operator*(const MoebiusMap& p, const MoebiusMap& q);
  friend bool operator==(const MoebiusMap& p, const MoebiusMap& q) { return p.m_ == q.m_; }

 private:
  std::array<AlgebraicNumber, 4> m_;
};

std::string to_string(const MoebiusMap& m);

}  // namespace a5
