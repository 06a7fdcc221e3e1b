#include <algorithm>
#include <string>

#include <doctest.h>

#include "fishburn/cover.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/tree.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace fishburn;
using testing::error_of;
using testing::seq;
using testing::tree;

TEST_CASE("running example tree is the max-decomposition tree of its word") {
  const Tree drawn = golden::running_tree_from_drawing();
  CHECK(seq_to_tree(seq(golden::kRunningWord)) == drawn);
  CHECK(in_order(drawn) == seq(golden::kRunningWord));
  CHECK(is_fishburn_tree(drawn));
  CHECK(drawn.size() == 21);
  CHECK(drawn.max_label() == 9);
}

TEST_CASE("treetops equal unseen on the running example tree") {
  const auto tu = treetops_and_unseen(golden::running_tree_from_drawing());
  // Underlined entries: positions of 1, 5, 3, 8, 2, 4, 7, 9, 6.
  const std::vector<NodeRef> expected{{1}, {3}, {6}, {7}, {12}, {14}, {16}, {18}, {20}};
  CHECK(tu.treetops == expected);
  CHECK(tu.unseen == expected);
}

TEST_CASE("the non-Fishburn example trees share an in-order word but fail different conditions") {
  const Tree left = tree(golden::kNonFishburnLeft);
  const Tree right = tree(golden::kNonFishburnRight);
  CHECK(in_order(left) == seq(golden::kNonFishburnWord));
  CHECK(in_order(right) == seq(golden::kNonFishburnWord));

  const auto lc = classify_tree(left);
  CHECK_FALSE(lc.strictly_left_decreasing);
  CHECK_FALSE(lc.endotree);
  const auto lv = fishburn_violation(left);
  REQUIRE(lv.has_value());
  CHECK(lv->find("not an endotree") != std::string::npos);
  CHECK(lv->find("strictly decrease to the left") != std::string::npos);

  const auto rc = classify_tree(right);
  CHECK(rc.endotree);
  CHECK(rc.regular);
  CHECK_FALSE(rc.fishburn);
  const auto rv = fishburn_violation(right);
  REQUIRE(rv.has_value());
  CHECK(rv->find("treetops != unseen") != std::string::npos);

  CHECK(error_of([&] { rpath_decomposition(right); }).code() == ErrorCode::NotFishburn);
}

TEST_CASE("of the 13 regular endotrees of size 3, exactly the listed five are Fishburn") {
  std::vector<std::string> regular;
  std::vector<std::string> fishburn;
  for_each_endotree(3, [&](const Tree& t) {
    const auto c = classify_tree(t);
    if (c.regular) regular.push_back(text::format_tree(t));
    if (c.fishburn) fishburn.push_back(text::format_tree(t));
  });
  CHECK(regular.size() == 13);
  auto expected = golden::kSize3Fishburn;
  std::sort(expected.begin(), expected.end());
  std::sort(fishburn.begin(), fishburn.end());
  CHECK(fishburn == expected);
}

TEST_CASE("leftmost maximum becomes the ancestor") {
  CHECK(text::format_tree(seq_to_tree(seq("22"))) == "(. 2 (. 2 .))");
  CHECK(text::format_tree(seq_to_tree(seq("1"))) == "(. 1 .)");
  CHECK(seq_to_tree(Sequence{}).empty());
  CHECK(error_of([] { seq_to_tree(seq("13")); }).code() == ErrorCode::NotEndofunction);
}

TEST_CASE("join and leaf build canonical arenas") {
  const Tree t = Tree::join(Tree::leaf(1), 2, Tree::leaf(2));
  CHECK(t == tree("((. 1 .) 2 (. 2 .))"));
  CHECK(t.root() == 1);
  CHECK(t.label(NodeRef{3}) == 2);
  CHECK(t.parents() == std::vector<int>{1, Tree::kNone, 1});
}

TEST_CASE("from_arena rejects malformed arenas") {
  std::vector<Tree::Node> cyclic{{1, Tree::kNone, 1}, {1, 0, Tree::kNone}};
  CHECK(error_of([&] { Tree::from_arena(cyclic, 0); }).code() == ErrorCode::Internal);
  std::vector<Tree::Node> dangling{{1, 5, Tree::kNone}};
  CHECK(error_of([&] { Tree::from_arena(dangling, 0); }).code() == ErrorCode::Internal);
}

TEST_CASE("rpath decomposition of the cover example tree") {
  const Tree t = cover_to_tree(testing::cover(golden::kCoverExampleCover));
  const auto d = rpath_decomposition(t);
  CHECK(d.k == 7);
  CHECK(d.blabels == golden::kCoverExampleBLabels);
  CHECK(d.diagonal == std::vector<Label>{1, 2, 5, 7});
  for (Label i = 1; i <= d.k; ++i) {
    // Each path runs top to bottom along right-child links.
    const auto& path = d.paths[i - 1];
    for (std::size_t s = 1; s < path.size(); ++s)
      CHECK(t.node(path[s - 1].in_order_index - 1).right == path[s].in_order_index - 1);
  }
}

TEST_CASE("comb and strictly decreasing shapes") {
  CHECK(classify_tree(seq_to_tree(seq("123"))).comb_shaped);
  CHECK(classify_tree(seq_to_tree(seq("121"))).comb_shaped);
  CHECK_FALSE(classify_tree(seq_to_tree(seq(golden::kFlipX))).comb_shaped);
  CHECK(classify_tree(seq_to_tree(seq("121"))).strictly_decreasing);
  CHECK_FALSE(classify_tree(seq_to_tree(seq("11"))).strictly_decreasing);
}

TEST_CASE("deep trees are handled without recursion") {
  const int n = 200000;
  std::vector<Label> ones(n, 1);
  const Tree chain = seq_to_tree(Sequence(ones));
  CHECK(in_order(chain) == Sequence(ones));
  CHECK(is_fishburn_tree(chain));
  std::vector<Label> up(n);
  for (int i = 0; i < n; ++i) up[i] = i + 1;
  const Tree comb = seq_to_tree(Sequence(up));
  CHECK(classify_tree(comb).comb_shaped);
  CHECK(in_order(comb) == Sequence(up));
  const auto parsed = text::parse_tree(text::format_tree(comb));
  CHECK(parsed == comb);
  CHECK(pairs(comb).order() == n);
}
