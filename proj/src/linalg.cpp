#include "qloop/linalg.hpp"

#include <utility>

#include "qloop/error.hpp"

namespace qloop {

namespace {

// Index of the best pivot row for `col` among rows[from..), or -1.
int pick_pivot(const ScalarMatrix& m, size_t from, size_t col) {
  int best = -1;
  long best_val = 0;
  for (size_t r = from; r < m.size(); ++r) {
    const Scalar& s = m[r][col];
    if (s.is_zero()) continue;
    long val = *s.val0();
    if (best == -1 || val < best_val) {
      best = static_cast<int>(r);
      best_val = val;
    }
  }
  return best;
}

}  // namespace

int matrix_rank(ScalarMatrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    int piv = pick_pivot(m, rank, col);
    if (piv < 0) continue;
    std::swap(m[rank], m[static_cast<size_t>(piv)]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] / m[rank][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

SolveResult solve_system(ScalarMatrix a, std::vector<Scalar> b) {
  size_t rows = a.size();
  if (rows != b.size()) throw DomainError("solve_system dimension mismatch");
  size_t cols = rows == 0 ? 0 : a[0].size();
  SolveResult res;
  std::vector<int> pivot_col_of_row;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    int piv = pick_pivot(a, rank, col);
    if (piv < 0) continue;
    std::swap(a[rank], a[static_cast<size_t>(piv)]);
    std::swap(b[rank], b[static_cast<size_t>(piv)]);
    Scalar d = a[rank][col];
    for (size_t c = col; c < cols; ++c) a[rank][c] /= d;
    b[rank] /= d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r) {
    if (!b[r].is_zero()) {
      res.consistent = false;
      res.rank = static_cast<int>(rank);
      return res;
    }
  }
  res.consistent = true;
  res.rank = static_cast<int>(rank);
  res.solution.assign(cols, Scalar());
  for (size_t r = 0; r < rank; ++r) res.solution[pivot_col_of_row[r]] = b[r];
  return res;
}

EchelonBasis echelon_basis(ScalarMatrix rows) {
  EchelonBasis out;
  if (rows.empty()) return out;
  size_t n = rows.size(), cols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < n; ++col) {
    int piv = pick_pivot(rows, rank, col);
    if (piv < 0) continue;
    std::swap(rows[rank], rows[static_cast<size_t>(piv)]);
    Scalar d = rows[rank][col];
    for (size_t c = 0; c < cols; ++c) rows[rank][c] /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

std::vector<Scalar> reduce_against(const EchelonBasis& basis, std::vector<Scalar> x) {
  for (size_t r = 0; r < basis.rows.size(); ++r) {
    size_t p = static_cast<size_t>(basis.pivot_cols[r]);
    if (p >= x.size()) throw DomainError("reduce_against dimension mismatch");
    if (x[p].is_zero()) continue;
    Scalar f = x[p];
    for (size_t c = 0; c < x.size(); ++c) x[c] -= f * basis.rows[r][c];
  }
  return x;
}

}  // namespace qloop
