#include "cmreg/linalg.hpp"

namespace cmreg {

bool RowReducer::add_row(std::vector<mpq_class> row) {
  if (static_cast<int>(row.size()) != width_)
    fail(ErrorCode::invalid_input, "row width mismatch");
  const Field& F = field_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (F.is_zero(row[p])) continue;
    mpq_class f = F.div(row[p], rows_[r][p]);
    for (int j = p; j < width_; ++j)
      row[j] = F.sub(row[j], F.mul(f, rows_[r][j]));
  }
  int pivot = -1;
  for (int j = 0; j < width_; ++j) {
    if (!F.is_zero(row[j])) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  // Keep echelon rows sorted by pivot column so reduction stays one pass.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

std::optional<std::vector<std::vector<mpq_class>>> invert_matrix(
    const Field& field, const std::vector<std::vector<mpq_class>>& a) {
  const int n = static_cast<int>(a.size());
  const Field& F = field;
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) return std::nullopt;
    for (int j = 0; j < n; ++j) m[i][j] = F.reduce(a[i][j]);
    m[i][n + i] = F.one();
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (!F.is_zero(m[i][col])) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    mpq_class inv = F.inv(m[col][col]);
    for (int j = 0; j < 2 * n; ++j) m[col][j] = F.mul(m[col][j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == col || F.is_zero(m[i][col])) continue;
      mpq_class f = m[i][col];
      for (int j = 0; j < 2 * n; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[col][j]));
    }
  }
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace cmreg
