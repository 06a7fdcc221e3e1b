#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/cover.hpp"
#include "fishburn/tree.hpp"

namespace fishburn {

/// Canonical label pair of a poset element: `level` is the index of its
/// strict down-set in the chain D_1 < ... < D_k, `b` the index of the last
/// down-set not containing it. Then u < v iff u.b < v.level.
struct PosetElement {
  Label b;
  Label level;

  friend bool operator==(const PosetElement&, const PosetElement&) = default;
};

/// Burge order: b ascending, then level descending.
inline bool burge_less(const PosetElement& x, const PosetElement& y) {
  return x.b != y.b ? x.b < y.b : x.level > y.level;
}

/// A (2+2)-free poset as the multiset of canonical label pairs, stored in
/// Burge order. Two (2+2)-free posets are isomorphic iff these are equal.
class IntervalPoset {
 public:
  IntervalPoset() = default;

  /// Throws INVALID_POSET.
  static IntervalPoset from_elements(std::vector<PosetElement> elements);

  /// Number of levels k.
  int levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<PosetElement>& elements() const noexcept { return elements_; }
  /// Derived order on 0-based element indices.
  bool less(std::size_t u, std::size_t v) const { return elements_[u].b < elements_[v].level; }

  friend bool operator==(const IntervalPoset&, const IntervalPoset&) = default;

 private:
  int levels_ = 0;
  std::vector<PosetElement> elements_;
};

std::optional<std::string> poset_violation(const std::vector<PosetElement>& elements);

/// Strict order on elements 1..n given by (u, v) pairs meaning u < v.
/// Need not be transitively closed.
struct RelationInput {
  int n = 0;
  std::vector<std::pair<int, int>> less_pairs;
};

struct PosetClass {
  bool is_primitive = true;
  bool has_max_chain = true;
};

/// Throws NOT_FISHBURN.
IntervalPoset tree_to_poset(const Tree& t);
/// Throws INVALID_POSET (only reachable for unvalidated input).
Tree poset_to_tree(const IntervalPoset& q);

FishburnCover poset_to_cover(const IntervalPoset& q);
IntervalPoset cover_to_poset(const FishburnCover& cover);

/// Transitive closure, then canonical labeling. Throws NOT_A_PARTIAL_ORDER
/// on a cycle or out-of-range pair, and NOT_TWO_PLUS_TWO_FREE naming two
/// elements with incomparable down-sets plus the induced 2+2.
IntervalPoset poset_from_relation(const RelationInput& relation);

/// Explicit strict relation of the derived order over 1-based indices.
RelationInput relation_of(const IntervalPoset& q);

/// Order-reversed poset, relabeled from its reversed down-sets.
IntervalPoset dual(const IntervalPoset& q);

PosetClass classify_poset(const IntervalPoset& q);

/// Number of elements in a longest chain (0 for the empty poset).
int longest_chain(const IntervalPoset& q);

/// Covering pairs (u, v), 1-based indices into elements(): u < v with
/// nothing strictly between.
std::vector<std::pair<int, int>> cover_relation(const IntervalPoset& q);

/// Brute-force check that the derived relation is a strict partial order
/// whose strict down-sets form a chain.
bool satisfies_order_axioms(const IntervalPoset& q);

}  // namespace fishburn
