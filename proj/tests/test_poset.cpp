#include <algorithm>
#include <set>

#include <doctest.h>

#include "fishburn/poset.hpp"
#include "fishburn/transforms.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace fishburn;
using testing::error_of;
using testing::seq;
using testing::tree;

namespace {

IntervalPoset example_poset() {
  std::vector<PosetElement> e;
  for (auto [b, l] : golden::kPosetExampleElements) e.push_back({b, l});
  return IntervalPoset::from_elements(e);
}

RelationInput example_relation() {
  RelationInput r{static_cast<int>(golden::kPosetExampleElements.size()), {}};
  for (auto [upper, lower] : golden::kPosetExampleHasse) r.less_pairs.emplace_back(lower, upper);
  return r;
}

// Longest chain by dynamic programming over the explicit relation.
int longest_chain_oracle(const IntervalPoset& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return q.elements()[a].level < q.elements()[b].level; });
  std::vector<int> best(n, 1);
  int top = 0;
  for (auto v : order) {
    for (auto u : order)
      if (q.less(u, v)) best[v] = std::max(best[v], best[u] + 1);
    top = std::max(top, best[v]);
  }
  return top;
}

}  // namespace

TEST_CASE("poset example tree gives the drawn canonical labels") {
  const Tree t = tree(golden::kPosetExampleTree);
  CHECK(in_order(t) == seq(golden::kFlipX));
  CHECK(tree_to_poset(t) == example_poset());
  CHECK(poset_to_tree(example_poset()) == t);
}

TEST_CASE("poset example Hasse diagram relabels canonically") {
  const auto q = poset_from_relation(example_relation());
  CHECK(q == example_poset());
  CHECK(satisfies_order_axioms(q));

  // The covering pairs match the drawn edges, compared as label pairs.
  using Labels = std::pair<std::pair<int, int>, std::pair<int, int>>;
  std::multiset<Labels> drawn;
  for (auto [upper, lower] : golden::kPosetExampleHasse)
    drawn.insert({golden::kPosetExampleElements[lower - 1], golden::kPosetExampleElements[upper - 1]});
  std::multiset<Labels> computed;
  for (auto [u, v] : cover_relation(q)) {
    const auto& a = q.elements()[u - 1];
    const auto& b = q.elements()[v - 1];
    computed.insert({{a.b, a.level}, {b.b, b.level}});
  }
  CHECK(computed == drawn);
}

TEST_CASE("2+2 relations are rejected with a witness") {
  const auto e = error_of([] { poset_from_relation({4, {{1, 2}, {3, 4}}}); });
  CHECK(e.code() == ErrorCode::NotTwoPlusTwoFree);
  CHECK(std::string(e.what()).find("NOT_TWO_PLUS_TWO_FREE") == 0);
  CHECK(e.detail().find("2+2") != std::string::npos);
}

TEST_CASE("non-orders are rejected") {
  CHECK(error_of([] { poset_from_relation({2, {{1, 2}, {2, 1}}}); }).code() == ErrorCode::NotAPartialOrder);
  CHECK(error_of([] { poset_from_relation({2, {{1, 1}}}); }).code() == ErrorCode::NotAPartialOrder);
  CHECK(error_of([] { poset_from_relation({2, {{1, 3}}}); }).code() == ErrorCode::NotAPartialOrder);
}

TEST_CASE("antichains and chains") {
  const auto antichain = poset_from_relation({3, {}});
  CHECK(antichain.levels() == 1);
  CHECK(longest_chain(antichain) == 1);
  const auto chain = poset_from_relation({3, {{1, 2}, {2, 3}}});
  CHECK(chain.levels() == 3);
  CHECK(longest_chain(chain) == 3);
  CHECK(classify_poset(chain).has_max_chain);
  CHECK(poset_from_relation({0, {}}) == IntervalPoset{});
}

TEST_CASE("relation_of inverts poset_from_relation") {
  const auto q = example_poset();
  CHECK(poset_from_relation(relation_of(q)) == q);
  const auto r = relation_of(q);
  CHECK(r.n == 10);
  for (auto [u, v] : r.less_pairs) CHECK(q.less(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)));
}

TEST_CASE("duality matches the flip of the word") {
  const auto q = example_poset();
  CHECK(dual(dual(q)) == q);
  CHECK(dual(q) == tree_to_poset(seq_to_tree(seq(golden::kFlipResult))));
}

TEST_CASE("longest chain agrees with the dynamic-programming oracle") {
  for (const auto& word : {golden::kFlipX, golden::kRunningWord, golden::kCoverExampleWord, golden::kSumResult}) {
    const auto q = tree_to_poset(seq_to_tree(seq(word)));
    CHECK(longest_chain(q) == longest_chain_oracle(q));
  }
}

TEST_CASE("invalid label pairs") {
  CHECK(error_of([] { IntervalPoset::from_elements({{1, 2}, {2, 1}}); }).code() == ErrorCode::InvalidPoset);
  CHECK(error_of([] { IntervalPoset::from_elements({{2, 2}}); }).code() == ErrorCode::InvalidPoset);
  CHECK(error_of([] { IntervalPoset::from_elements({{2, 1}}); }).code() == ErrorCode::InvalidPoset);
}
