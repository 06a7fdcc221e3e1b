#pragma once

#include "fishburn/cover.hpp"
#include "fishburn/matrix.hpp"
#include "fishburn/poset.hpp"

namespace fishburn {

/// Column map (i, j) -> (k+1-j, k+1-i); the cover-level antidiagonal flip.
FishburnCover cover_flip(const FishburnCover& cover);

/// Blockwise multiset union; blocks past the shorter cover are kept.
FishburnCover cover_sum(const FishburnCover& a, const FishburnCover& b);

/// Both throw NOT_MODASC.
Sequence flip_modasc(const Sequence& x);
Sequence sum_modasc(const Sequence& x, const Sequence& y);

/// One statistic evaluated on each of the four structures of a modified
/// ascent sequence.
struct Quadruple {
  bool tree = false;
  bool sequence = false;
  bool matrix = false;
  bool poset = false;

  bool all_equal() const { return tree == sequence && sequence == matrix && matrix == poset; }
};

struct ClassifyAll {
  /// strictly decreasing tree / no flat steps / binary matrix / no
  /// indistinguishable poset elements
  Quadruple primitive;
  /// comb-shaped tree / every block diagonal / positive matrix diagonal /
  /// chain through every level. The sequence slot is the cover-level
  /// condition D = [k]; see README.
  Quadruple self_modified;
};

/// Throws NOT_MODASC.
ClassifyAll classify_all(const Sequence& x);

}  // namespace fishburn
