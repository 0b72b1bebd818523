#include "a5/icosa/moebius.hpp"

#include "a5/common/error.hpp"

namespace a5 {

MoebiusMap::MoebiusMap(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c,
                       const AlgebraicNumber& d)
    : m_{a, b, c, d} {
  if ((a * d - b * c).is_zero()) fail(ErrorKind::InvalidArgument, "singular Moebius matrix");
  for (const auto& e : m_) {
    if (e.is_zero()) continue;
    if (e == AlgebraicNumber(1)) break;
    const AlgebraicNumber inv = e.inverse();
    for (auto& v : m_) v *= inv;
    break;
  }
}

MoebiusMap operator*(const MoebiusMap& p, const MoebiusMap& q) {
  const auto& x = p.m_;
  const auto& y = q.m_;
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

int MoebiusMap::order(int limit) const {
  MoebiusMap p = *this;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

std::string MoebiusMap::key() const {
  std::string k;
  for (const auto& e : m_) {
    for (const auto& c : e.coefficients()) k += c.str() + ",";
    k += ";";
  }
  return k;
}

std::string to_string(const MoebiusMap& m) {
  return "[[" + to_string(m.a()) + ", " + to_string(m.b()) + "], [" + to_string(m.c()) + ", " +
         to_string(m.d()) + "]]";
}

}  // namespace a5
