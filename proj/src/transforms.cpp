#include "fishburn/transforms.hpp"

#include <algorithm>

namespace fishburn {

FishburnCover cover_flip(const FishburnCover& cover) {
  const int k = cover.order();
  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (Label j : cover.block(i)) blocks[k - j].push_back(k + 1 - i);
  }
  return FishburnCover::from_blocks(std::move(blocks));
}

FishburnCover cover_sum(const FishburnCover& a, const FishburnCover& b) {
  auto blocks = a.order() >= b.order() ? a.blocks() : b.blocks();
  const auto& other = a.order() >= b.order() ? b.blocks() : a.blocks();
  for (std::size_t i = 0; i < other.size(); ++i)
    blocks[i].insert(blocks[i].end(), other[i].begin(), other[i].end());
  return FishburnCover::from_blocks(std::move(blocks));
}

Sequence flip_modasc(const Sequence& x) {
  return cover_to_modasc(cover_flip(modasc_to_cover(x).cover));
}

Sequence sum_modasc(const Sequence& x, const Sequence& y) {
  return cover_to_modasc(cover_sum(modasc_to_cover(x).cover, modasc_to_cover(y).cover));
}

ClassifyAll classify_all(const Sequence& x) {
  require_modasc(x);
  const Tree t = seq_to_tree(x);
  const FishburnCover cover = pairs(t);
  const TreeClass tc = classify_tree(t);
  const MatrixClass mc = classify_matrix(cover_to_matrix(cover));
  const PosetClass pc = classify_poset(tree_to_poset(t));

  bool all_diagonal = true;
  for (int i = 1; i <= cover.order(); ++i) all_diagonal = all_diagonal && cover.is_diagonal(i);

  ClassifyAll out;
  out.primitive = {tc.strictly_decreasing, classify(x).is_primitive, mc.is_binary, pc.is_primitive};
  out.self_modified = {tc.comb_shaped, all_diagonal, mc.has_positive_diagonal, pc.has_max_chain};
  return out;
}

}  // namespace fishburn
