#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fishburn {

/// Vertex labels, sequence values and block indices are all positive ints.
using Label = int;

/// A word x_1 ... x_n of positive integers. Stored 0-based; every position
/// reported to callers (IndexedEntry, NodeRef, ...) is 1-based.
class Sequence {
 public:
  Sequence() = default;
  Sequence(std::initializer_list<Label> values) : entries_(values) {}
  explicit Sequence(std::vector<Label> values) : entries_(std::move(values)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Label operator[](std::size_t i) const { return entries_[i]; }
  /// 1-based access.
  Label at(std::size_t position) const { return entries_.at(position - 1); }

  const std::vector<Label>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// 0 for the empty sequence.
  Label max() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Label> entries_;
};

struct IndexedEntry {
  int position;  // 1-based
  Label value;

  friend bool operator==(const IndexedEntry&, const IndexedEntry&) = default;
  friend auto operator<=>(const IndexedEntry&, const IndexedEntry&) = default;
};

/// Sorted by position, positions distinct.
using IndexedEntrySet = std::vector<IndexedEntry>;

/// Ordered set partition of [n]; blocks[i] holds the positions with x = i+1.
struct Ballot {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

struct SequenceClass {
  bool is_endofunction = true;
  bool is_cayley = true;
  bool is_ascent_sequence = true;
  bool is_modified_ascent_sequence = true;
  bool is_primitive = true;  // no flat step x_i = x_{i+1}
  Label max = 0;
};

struct MaxDecomposition {
  Sequence prefix;
  Label pivot_value;
  int pivot_position;  // 1-based, leftmost occurrence of the maximum
  Sequence suffix;
};

SequenceClass classify(const Sequence& x);

bool is_endofunction(const Sequence& x);
bool is_cayley(const Sequence& x);
bool is_ascent_sequence(const Sequence& x);
bool is_modified_ascent_sequence(const Sequence& x);

/// Ascent tops including the first entry. The empty sequence yields {}.
IndexedEntrySet asctops(const Sequence& x);

/// Leftmost occurrence of each value 1..max. Throws NOT_CAYLEY.
IndexedEntrySet nub(const Sequence& x);

/// Throws EMPTY on the empty sequence.
MaxDecomposition max_decomposition(const Sequence& x);

/// Position i goes to block x_i. Throws NOT_CAYLEY.
Ballot to_ballot(const Sequence& x);
Sequence from_ballot(const Ballot& ballot);

/// Throws NOT_MODASC unless x is a modified ascent sequence.
void require_modasc(const Sequence& x);

}  // namespace fishburn
