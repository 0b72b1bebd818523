#pragma once

#include <optional>
#include <vector>

#include "a5/exactfield/field.hpp"

namespace a5 {

template <FieldElement F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns pivot columns.
template <FieldElement F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const F inv = F(Rational(1)) / m[row][col];
    for (std::size_t j = col; j < cols; ++j)
      if (!is_zero(m[row][j])) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const F f = m[r][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!is_zero(m[row][j])) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {v : m v = 0}.
template <FieldElement F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
  for (auto& r : m)
    if (r.size() != cols) fail(ErrorKind::InvalidArgument, "ragged matrix");
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(Rational(0)));
    v[free] = F(Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of a x = b, or nullopt when inconsistent or underdetermined.
template <FieldElement F>
std::optional<std::vector<F>> solve_unique(Matrix<F> a, const std::vector<F>& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = row_reduce(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  std::vector<F> x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace a5
