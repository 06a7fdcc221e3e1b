#include <doctest.h>

#include "fishburn/enumeration.hpp"
#include "fishburn/transforms.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace fishburn;
using testing::cover;
using testing::error_of;
using testing::seq;

TEST_CASE("flip example") {
  CHECK(flip_modasc(seq(golden::kFlipX)) == seq(golden::kFlipResult));
  CHECK(flip_modasc(seq(golden::kFlipResult)) == seq(golden::kFlipX));
  CHECK(flip_modasc(seq("1")) == seq("1"));
  CHECK(flip_modasc(Sequence{}).empty());
}

TEST_CASE("flip at cover level is the column map") {
  const auto p = modasc_to_cover(seq(golden::kFlipX)).cover;
  const auto f = cover_flip(p);
  CHECK(f == cover("{1}{1,1}{2}{2,1}{4,3}{6,5}"));
  CHECK(cover_flip(f) == p);
}

TEST_CASE("sum example") {
  CHECK(sum_modasc(seq(golden::kFlipX), seq(golden::kSumY)) == seq(golden::kSumResult));
  CHECK(sum_modasc(seq(golden::kSumY), seq(golden::kFlipX)) == seq(golden::kSumResult));
  CHECK(sum_modasc(seq("1"), Sequence{}) == seq("1"));
  CHECK(cover_sum(cover("{1}"), cover("{1}{2}")) == cover("{1,1}{2}"));
}

TEST_CASE("flip and sum reject non-modasc input") {
  CHECK(error_of([] { flip_modasc(seq("21")); }).code() == ErrorCode::NotModasc);
  CHECK(error_of([] { sum_modasc(seq("1"), seq("21")); }).code() == ErrorCode::NotModasc);
  CHECK(error_of([] { classify_all(seq("21")); }).code() == ErrorCode::NotModasc);
}

TEST_CASE("classification quadruples on small cases") {
  const auto comb = classify_all(seq("123"));
  CHECK(comb.self_modified.tree);
  CHECK(comb.self_modified.all_equal());
  CHECK(comb.primitive.sequence);
  CHECK(comb.primitive.all_equal());

  const auto flat = classify_all(seq("111"));
  CHECK_FALSE(flat.primitive.sequence);
  CHECK(flat.primitive.all_equal());

  const auto x = classify_all(seq(golden::kFlipX));
  CHECK_FALSE(x.self_modified.matrix);  // a(2,2) = 0
  CHECK(x.self_modified.all_equal());
  CHECK(x.primitive.all_equal());
}

TEST_CASE("quadruples agree for every modified ascent sequence up to size 6") {
  for (int n = 0; n <= 6; ++n) {
    for_each_modasc(n, [](const Sequence& x) {
      const auto c = classify_all(x);
      CHECK(c.primitive.all_equal());
      CHECK(c.self_modified.all_equal());
    });
  }
}
