#include "nhq/linalg.hpp"

namespace nhq {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && is_zero(m[pivot][col])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < m[row].size(); ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> null_space(RationalMatrix m, std::size_t cols) {
  for (auto& r : m) r.resize(cols, Rational(0));
  auto pivots = rref(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(RationalMatrix m, std::vector<Rational> b, std::size_t cols) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    m[r].resize(cols, Rational(0));
    m[r].push_back(b[r]);
  }
  auto pivots = rref(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (!is_zero(m[r][cols])) return std::nullopt;
  }
  LinearSolution s;
  s.x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = m[r][cols];
  s.free_variables = cols - pivots.size();
  return s;
}

}  // namespace nhq
