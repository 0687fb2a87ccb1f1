#include "linalg.hpp"

#include <algorithm>

namespace msidon {

unsigned rref(const Field& F, Mat& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  unsigned r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const elt s = F.inv(rows[r][col]);
    if (s != 1)
      for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const elt c = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

unsigned rank_of(const Field& F, Mat rows) { return rref(F, rows); }

Row reduce_against(const Field& F, const Mat& rref_rows, Row v) {
  for (const auto& row : rref_rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] == 0) continue;
    const elt c = v[lead];
    for (std::size_t j = lead; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, row[j]));
  }
  return v;
}

bool in_row_space(const Field& F, const Mat& rref_rows, Row v) {
  v = reduce_against(F, rref_rows, std::move(v));
  return std::all_of(v.begin(), v.end(), [](elt x) { return x == 0; });
}

Mat left_nullspace(const Field& F, const Mat& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return {};
  const std::size_t n = rows[0].size();
  // augment with identity, reduce, read combinations that hit zero
  Mat work(k, Row(n + k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), work[i].begin());
    work[i][n + i] = 1;
  }
  // eliminate using only the first n columns
  unsigned r = 0;
  for (std::size_t col = 0; col < n && r < k; ++col) {
    std::size_t piv = k;
    for (std::size_t i = r; i < k; ++i)
      if (work[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == k) continue;
    std::swap(work[r], work[piv]);
    const elt s = F.inv(work[r][col]);
    if (s != 1)
      for (auto& x : work[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || work[i][col] == 0) continue;
      const elt c = work[i][col];
      for (std::size_t j = 0; j < n + k; ++j) work[i][j] = F.sub(work[i][j], F.mul(c, work[r][j]));
    }
    ++r;
  }
  Mat null;
  for (std::size_t i = r; i < k; ++i)
    null.emplace_back(work[i].begin() + n, work[i].end());
  rref(F, null);
  return null;
}

std::optional<Row> solve_linear(const Field& F, Mat A, Row b) {
  const std::size_t rows = A.size();
  if (rows == 0) return Row{};
  const std::size_t cols = A[0].size();
  for (std::size_t i = 0; i < rows; ++i) A[i].push_back(b[i]);
  unsigned r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    const elt s = F.inv(A[r][col]);
    if (s != 1)
      for (auto& x : A[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][col] == 0) continue;
      const elt c = A[i][col];
      for (std::size_t j = col; j <= cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(c, A[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (A[i][cols] != 0) return std::nullopt;
  Row x(cols, 0);
  for (unsigned i = 0; i < r; ++i) x[pivot_col[i]] = A[i][cols];
  return x;
}

std::optional<Mat> invert(const Field& F, Mat A) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) {
    A[i].resize(2 * n, 0);
    A[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(A[col], A[piv]);
    const elt s = F.inv(A[col][col]);
    if (s != 1)
      for (auto& x : A[col]) x = F.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || A[i][col] == 0) continue;
      const elt c = A[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) A[i][j] = F.sub(A[i][j], F.mul(c, A[col][j]));
    }
  }
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Row(A[i].begin() + n, A[i].end());
  return inv;
}

}  // namespace msidon
