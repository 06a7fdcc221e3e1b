#include "fishburn/matrix.hpp"

#include <string>

#include "fishburn/error.hpp"

namespace fishburn {

namespace {

Entry checked_add(Entry a, Entry b) {
  Entry r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "matrix entry sum exceeds 64 bits");
  return r;
}

}  // namespace

FishburnMatrix FishburnMatrix::from_lower_rows(const std::vector<std::vector<Entry>>& rows) {
  const int k = static_cast<int>(rows.size());
  FishburnMatrix a;
  a.dim_ = k;
  a.packed_.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2);
  std::vector<bool> column_hit(static_cast<std::size_t>(k) + 1, false);
  for (int i = 1; i <= k; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != i)
      throw Error(ErrorCode::InvalidMatrix,
                  "row " + std::to_string(i) + " must hold " + std::to_string(i) + " entries");
    bool row_hit = false;
    for (int j = 1; j <= i; ++j) {
      const Entry v = row[j - 1];
      if (v < 0)
        throw Error(ErrorCode::InvalidMatrix,
                    "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (v > 0) {
        row_hit = true;
        column_hit[j] = true;
      }
      a.packed_.push_back(v);
    }
    if (!row_hit) throw Error(ErrorCode::InvalidMatrix, "row " + std::to_string(i) + " is zero");
  }
  for (int j = 1; j <= k; ++j) {
    if (!column_hit[j]) throw Error(ErrorCode::InvalidMatrix, "column " + std::to_string(j) + " is zero");
  }
  return a;
}

FishburnMatrix FishburnMatrix::from_square(const std::vector<std::vector<Entry>>& rows) {
  const auto k = rows.size();
  std::vector<std::vector<Entry>> lower;
  lower.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw Error(ErrorCode::InvalidMatrix, "matrix is not square");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (rows[i][j] != 0)
        throw Error(ErrorCode::InvalidMatrix, "nonzero entry above the diagonal at (" +
                                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    lower.emplace_back(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(i + 1));
  }
  return from_lower_rows(lower);
}

Entry FishburnMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) return 0;
  return j > i ? 0 : packed_[offset(i, j)];
}

Entry FishburnMatrix::size() const {
  Entry s = 0;
  for (Entry v : packed_) s = checked_add(s, v);
  return s;
}

std::vector<std::vector<Entry>> FishburnMatrix::lower_rows() const {
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(dim_));
  for (int i = 1; i <= dim_; ++i) {
    for (int j = 1; j <= i; ++j) rows[i - 1].push_back(at(i, j));
  }
  return rows;
}

FishburnMatrix cover_to_matrix(const FishburnCover& cover) {
  const int k = cover.order();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    rows[i - 1].assign(static_cast<std::size_t>(i), 0);
    for (Label j : cover.block(i)) ++rows[i - 1][j - 1];
  }
  return FishburnMatrix::from_lower_rows(rows);
}

FishburnCover matrix_to_cover(const FishburnMatrix& a) {
  const int k = a.dim();
  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j >= 1; --j) blocks[i - 1].insert(blocks[i - 1].end(), static_cast<std::size_t>(a.at(i, j)), j);
  }
  return FishburnCover::from_blocks(std::move(blocks));
}

FishburnMatrix flip_matrix(const FishburnMatrix& a) {
  const int k = a.dim();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) rows[i - 1].push_back(a.at(k + 1 - j, k + 1 - i));
  }
  return FishburnMatrix::from_lower_rows(rows);
}

FishburnMatrix sum_matrices(const FishburnMatrix& a, const FishburnMatrix& b) {
  if (a.dim() > b.dim()) return sum_matrices(b, a);
  const int q = b.dim();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= i; ++j) rows[i - 1].push_back(checked_add(a.at(i, j), b.at(i, j)));
  }
  return FishburnMatrix::from_lower_rows(rows);
}

MatrixClass classify_matrix(const FishburnMatrix& a) {
  MatrixClass c;
  for (int i = 1; i <= a.dim(); ++i) {
    for (int j = 1; j <= i; ++j) {
      if (a.at(i, j) > 1) c.is_binary = false;
    }
    if (a.at(i, i) == 0) c.has_positive_diagonal = false;
  }
  return c;
}

}  // namespace fishburn
