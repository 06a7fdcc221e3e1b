#pragma once

#include <cstdint>
#include <vector>

#include "fishburn/cover.hpp"

namespace fishburn {

using Entry = std::int64_t;

/// k x k lower-triangular matrix of nonnegative integers without zero rows
/// or columns. Entries above the diagonal are implicitly zero.
class FishburnMatrix {
 public:
  /// The 0 x 0 matrix (size 0).
  FishburnMatrix() = default;

  /// rows[i-1] holds the i entries a(i,1) ... a(i,i). Throws INVALID_MATRIX.
  static FishburnMatrix from_lower_rows(const std::vector<std::vector<Entry>>& rows);
  /// Square input; anything nonzero above the diagonal is INVALID_MATRIX.
  static FishburnMatrix from_square(const std::vector<std::vector<Entry>>& rows);

  int dim() const noexcept { return dim_; }
  /// 1-based; zero above the diagonal.
  Entry at(int i, int j) const;
  /// Sum of entries; throws OVERFLOW.
  Entry size() const;
  std::vector<std::vector<Entry>> lower_rows() const;

  friend bool operator==(const FishburnMatrix&, const FishburnMatrix&) = default;

 private:
  static std::size_t offset(int i, int j) {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2 +
           static_cast<std::size_t>(j - 1);
  }

  int dim_ = 0;
  std::vector<Entry> packed_;  // row-major lower triangle
};

struct MatrixClass {
  bool is_binary = true;
  bool has_positive_diagonal = true;
};

FishburnMatrix cover_to_matrix(const FishburnCover& cover);
FishburnCover matrix_to_cover(const FishburnMatrix& a);

/// Reflection in the antidiagonal: flip(A)(i,j) = a(k+1-j, k+1-i).
FishburnMatrix flip_matrix(const FishburnMatrix& a);

/// Entrywise sum with the smaller matrix embedded top-left. Throws OVERFLOW.
FishburnMatrix sum_matrices(const FishburnMatrix& a, const FishburnMatrix& b);

MatrixClass classify_matrix(const FishburnMatrix& a);

}  // namespace fishburn
