#pragma once

#include <utility>
#include <vector>

#include "a5/polyring/poly.hpp"

namespace a5 {

/// Polynomial of degree <= n through the points; points beyond the first n+1 are checked.
template <FieldElement F>
Poly<F> interpolate(const std::vector<std::pair<F, F>>& points, int n) {
  if (n < 0 || static_cast<int>(points.size()) < n + 1)
    fail(ErrorKind::InvalidArgument, "interpolation needs at least n+1 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].first == points[j].first) fail(ErrorKind::DuplicateAbscissa, "repeated abscissa in interpolation");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  // Newton divided differences on the first n+1 points.
  std::vector<F> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly<F> result(dd[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;)
    result = result * Poly<F>{-points[k].first, F(Rational(1))} + Poly<F>(dd[k]);
  for (std::size_t i = m; i < points.size(); ++i)
    if (!(result(points[i].first) == points[i].second))
      fail(ErrorKind::InconsistentData, "sample points do not lie on a polynomial of degree <= " + std::to_string(n));
  return result;
}

}  // namespace a5
