#include "dftalg/linalg_exact.hpp"

#include <utility>

#include "dftalg/error.hpp"

namespace dftalg {

ExactRankResult exact_rank(std::vector<ExactVector> rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);

    const CycloScalar scale = rows[pivot_row][col].inv();
    for (std::size_t c = col; c < cols; ++c)
      if (!rows[pivot_row][c].is_zero()) rows[pivot_row][c] *= scale;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const CycloScalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (rows[pivot_row][c].is_zero()) continue;
        rows[r][c] -= factor * rows[pivot_row][c];
      }
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  ExactRankResult result;
  result.rank = static_cast<int>(pivot_cols.size());
  result.nullity = static_cast<int>(cols) - result.rank;
  if (result.nullity == 0 || rows.empty()) return result;

  const FieldPtr field = rows.front().front().field();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(cols, CycloScalar::zero(field));
    v[free] = CycloScalar::one(field);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -rows[k][free];
    result.null_basis.push_back(std::move(v));
  }
  return result;
}

ExactRankResult exact_rank(const ExactMatrix& m) {
  const std::size_t n = m.size();
  std::vector<ExactVector> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows[r].reserve(n);
    for (std::size_t c = 0; c < n; ++c) rows[r].push_back(m(r, c));
  }
  return exact_rank(std::move(rows), n);
}

ExactVector apply(const ExactMatrix& m, const ExactVector& v) {
  const std::size_t n = m.size();
  if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "vector size mismatch");
  ExactVector out(n, CycloScalar::zero(v.front().field()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace dftalg
