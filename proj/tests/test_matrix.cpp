#include <limits>

#include <doctest.h>

#include "fishburn/matrix.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace fishburn;
using testing::cover;
using testing::error_of;
using testing::seq;

namespace {

FishburnMatrix rows(const std::vector<std::vector<long long>>& r) {
  std::vector<std::vector<Entry>> e;
  for (const auto& row : r) e.emplace_back(row.begin(), row.end());
  return FishburnMatrix::from_lower_rows(e);
}

FishburnMatrix matrix_of(const std::string& word) { return cover_to_matrix(modasc_to_cover(seq(word)).cover); }

}  // namespace

TEST_CASE("running example cover gives the 9 x 9 matrix") {
  const auto a = cover_to_matrix(cover(golden::kRunningCover));
  CHECK(a == rows(golden::kRunningMatrix));
  CHECK(a.dim() == 9);
  CHECK(a.size() == 21);
  CHECK(matrix_to_cover(a) == cover(golden::kRunningCover));
  // Penultimate row is the block {8,8,7,3}.
  CHECK(a.at(8, 8) == 2);
  CHECK(a.at(8, 7) == 1);
  CHECK(a.at(8, 3) == 1);
  CHECK(a.at(1, 9) == 0);
}

TEST_CASE("flip example matrices") {
  const auto a = matrix_of(golden::kFlipX);
  CHECK(a == rows(golden::kMatrixX));
  CHECK(matrix_of(golden::kFlipResult) == rows(golden::kMatrixFlipX));
  CHECK(flip_matrix(a) == rows(golden::kMatrixFlipX));
  CHECK(flip_matrix(flip_matrix(a)) == a);
}

TEST_CASE("flip is the antidiagonal reflection") {
  const auto a = rows(golden::kRunningMatrix);
  const auto f = flip_matrix(a);
  const int k = a.dim();
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) CHECK(f.at(i, j) == a.at(k + 1 - j, k + 1 - i));
  }
}

TEST_CASE("sum example matrices") {
  const auto a = matrix_of(golden::kFlipX);
  const auto b = matrix_of(golden::kSumY);
  CHECK(b == rows(golden::kMatrixY));
  CHECK(sum_matrices(a, b) == rows(golden::kMatrixSum));
  CHECK(sum_matrices(b, a) == rows(golden::kMatrixSum));
  CHECK(matrix_of(golden::kSumResult) == rows(golden::kMatrixSum));
  CHECK(sum_matrices(a, FishburnMatrix{}) == a);
}

TEST_CASE("invalid matrices") {
  CHECK(error_of([] { FishburnMatrix::from_lower_rows({{1}, {0, 0}}); }).code() == ErrorCode::InvalidMatrix);
  CHECK(error_of([] { FishburnMatrix::from_lower_rows({{0}, {1, 1}}); }).code() == ErrorCode::InvalidMatrix);
  CHECK(error_of([] { FishburnMatrix::from_lower_rows({{1}, {-1, 1}}); }).code() == ErrorCode::InvalidMatrix);
  CHECK(error_of([] { FishburnMatrix::from_lower_rows({{1}, {1}}); }).code() == ErrorCode::InvalidMatrix);
  CHECK(error_of([] { FishburnMatrix::from_square({{1, 1}, {0, 1}}); }).code() == ErrorCode::InvalidMatrix);
  CHECK(FishburnMatrix::from_square({{1, 0}, {1, 1}}) == FishburnMatrix::from_lower_rows({{1}, {1, 1}}));
}

TEST_CASE("sizes and sums are overflow checked") {
  const Entry big = std::numeric_limits<Entry>::max();
  const auto a = FishburnMatrix::from_lower_rows({{big}});
  CHECK(a.size() == big);
  CHECK(error_of([&] { sum_matrices(a, a); }).code() == ErrorCode::Overflow);
  const auto b = FishburnMatrix::from_lower_rows({{big}, {0, 1}});
  CHECK(error_of([&] { (void)b.size(); }).code() == ErrorCode::Overflow);
}

TEST_CASE("classification") {
  CHECK(classify_matrix(matrix_of("123")).is_binary);
  CHECK(classify_matrix(matrix_of("123")).has_positive_diagonal);
  CHECK_FALSE(classify_matrix(matrix_of("11")).is_binary);
  CHECK_FALSE(classify_matrix(rows(golden::kMatrixX)).has_positive_diagonal);
}
