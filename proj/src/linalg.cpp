#include "cutlab/linalg.hpp"

#include <stdexcept>

namespace cutlab {

namespace {

// Row echelon form in place; returns pivot columns. Augmented columns (>= cols)
// are carried along but never chosen as pivots.
std::vector<int> echelon(QMat& a, int cols) {
  std::vector<int> pivot_cols;
  int row = 0;
  int m = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(QMat a) {
  if (a.empty()) return 0;
  return static_cast<int>(echelon(a, static_cast<int>(a[0].size())).size());
}

std::optional<QVec> solve_square(QMat a, QVec b) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("solve_square: not square");
    a[i].push_back(b[i]);
  }
  auto pivots = echelon(a, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  QVec x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::optional<QVec> solve_any(QMat a, QVec b) {
  int m = static_cast<int>(a.size());
  if (m == 0) return QVec{};
  int n = static_cast<int>(a[0].size());
  for (int i = 0; i < m; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a, n);
  // Inconsistent iff some row is (0 ... 0 | nonzero).
  for (int r = static_cast<int>(pivots.size()); r < m; ++r)
    if (!a[r][n].is_zero()) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<QVec> nullspace(QMat a, int cols) {
  if (a.empty()) {
    std::vector<QVec> basis;
    for (int j = 0; j < cols; ++j) {
      QVec v(cols);
      v[j] = Rational(1);
      basis.push_back(v);
    }
    return basis;
  }
  auto pivots = echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    QVec v(cols);
    v[freec] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][freec];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace cutlab
