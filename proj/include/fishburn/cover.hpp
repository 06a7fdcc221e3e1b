#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fishburn/sequence.hpp"
#include "fishburn/tree.hpp"

namespace fishburn {

/// Ordered list of nonempty multisets B_1 ... B_k with union [k] and
/// j <= i for every j in B_i. Blocks are kept sorted weakly decreasing, so
/// equality of covers is structural equality.
class FishburnCover {
 public:
  /// The empty cover (k = 0).
  FishburnCover() = default;

  /// Sorts each block and validates; throws INVALID_COVER naming the
  /// violated condition.
  static FishburnCover from_blocks(std::vector<std::vector<Label>> blocks);

  int order() const noexcept { return static_cast<int>(blocks_.size()); }
  /// Total multiplicity.
  std::size_t size() const noexcept;
  const std::vector<std::vector<Label>>& blocks() const noexcept { return blocks_; }
  /// 1-based.
  const std::vector<Label>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i - 1)); }
  /// i is diagonal when i belongs to B_i.
  bool is_diagonal(int i) const;

  friend bool operator==(const FishburnCover&, const FishburnCover&) = default;

 private:
  std::vector<std::vector<Label>> blocks_;
};

/// Reason the blocks fail to form a cover, or nullopt when they do.
std::optional<std::string> cover_violation(const std::vector<std::vector<Label>>& blocks);

struct BurgeColumn {
  Label top;
  Label bottom;

  friend bool operator==(const BurgeColumn&, const BurgeColumn&) = default;
};

struct BurgeWord {
  std::vector<BurgeColumn> columns;

  friend bool operator==(const BurgeWord&, const BurgeWord&) = default;
};

/// Cover of a Fishburn tree read off its maximal right paths.
/// Throws NOT_FISHBURN.
FishburnCover pairs(const Tree& t);

/// The unique Fishburn tree with the given cover: diagonal paths form a
/// comb, then non-diagonal paths are hung, largest index first, as left
/// child of the leftmost node carrying their index.
Tree cover_to_tree(const FishburnCover& cover);

/// Same assembly carried out on words: juxtapose diagonal blocks, then
/// insert each non-diagonal block before the leftmost occurrence of its
/// index, largest index first.
Sequence cover_to_modasc(const FishburnCover& cover);

struct ModascCover {
  FishburnCover cover;
  /// blabels[p-1] is the path index of position p.
  std::vector<Label> blabels;
};

/// Cover computed on the word itself via recursive max-decomposition.
/// Throws NOT_MODASC.
ModascCover modasc_to_cover(const Sequence& x);

BurgeWord to_burge(const FishburnCover& cover);
/// Throws INVALID_BURGE.
FishburnCover from_burge(const BurgeWord& word);

}  // namespace fishburn
