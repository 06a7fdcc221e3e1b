#include "fishburn/cover.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "fishburn/error.hpp"

namespace fishburn {

std::optional<std::string> cover_violation(const std::vector<std::vector<Label>>& blocks) {
  const auto k = static_cast<Label>(blocks.size());
  std::vector<bool> covered(blocks.size() + 1, false);
  for (Label i = 1; i <= k; ++i) {
    const auto& block = blocks[i - 1];
    if (block.empty()) return "block " + std::to_string(i) + " is empty";
    for (Label j : block) {
      if (j < 1) return "block " + std::to_string(i) + " holds non-positive value " + std::to_string(j);
      if (j > i)
        return "block " + std::to_string(i) + " holds " + std::to_string(j) + " > " + std::to_string(i);
      covered[j] = true;
    }
  }
  for (Label j = 1; j <= k; ++j) {
    if (!covered[j]) return "union of blocks misses " + std::to_string(j);
  }
  return std::nullopt;
}

FishburnCover FishburnCover::from_blocks(std::vector<std::vector<Label>> blocks) {
  if (auto why = cover_violation(blocks)) throw Error(ErrorCode::InvalidCover, *why);
  for (auto& block : blocks) std::sort(block.begin(), block.end(), std::greater<>());
  FishburnCover c;
  c.blocks_ = std::move(blocks);
  return c;
}

std::size_t FishburnCover::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

bool FishburnCover::is_diagonal(int i) const {
  // Blocks are sorted decreasing and hold values <= i.
  return block(i).front() == i;
}

FishburnCover pairs(const Tree& t) {
  const auto d = rpath_decomposition(t);
  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(d.k));
  for (Label i = 1; i <= d.k; ++i) {
    for (NodeRef v : d.paths[i - 1]) blocks[i - 1].push_back(t.label(v));
  }
  return FishburnCover::from_blocks(std::move(blocks));
}

namespace {

// Leftmost in-order node labeled `wanted`. Subtrees whose root label is
// below `wanted` are skipped: the tree is decreasing.
int leftmost_occurrence(const std::vector<Tree::Node>& arena, int root, Label wanted) {
  std::vector<int> stack;
  int cur = root;
  while (cur != Tree::kNone || !stack.empty()) {
    while (cur != Tree::kNone && arena[cur].label >= wanted) {
      stack.push_back(cur);
      cur = arena[cur].left;
    }
    if (stack.empty()) break;
    cur = stack.back();
    stack.pop_back();
    if (arena[cur].label == wanted) return cur;
    cur = arena[cur].right;
  }
  return Tree::kNone;
}

}  // namespace

Tree cover_to_tree(const FishburnCover& cover) {
  const int k = cover.order();
  if (k == 0) return Tree{};

  // One right path per block; head[i-1] is the first node of W_i.
  std::vector<Tree::Node> arena;
  arena.reserve(cover.size());
  std::vector<int> head(static_cast<std::size_t>(k), Tree::kNone);
  for (int i = 1; i <= k; ++i) {
    int prev = Tree::kNone;
    for (Label j : cover.block(i)) {
      const int slot = static_cast<int>(arena.size());
      arena.push_back(Tree::Node{j, Tree::kNone, Tree::kNone});
      if (prev == Tree::kNone) {
        head[i - 1] = slot;
      } else {
        arena[prev].right = slot;
      }
      prev = slot;
    }
  }

  // Comb of diagonal paths, largest index at the root.
  int root = Tree::kNone;
  int lowest = Tree::kNone;
  for (int i = k; i >= 1; --i) {
    if (!cover.is_diagonal(i)) continue;
    if (root == Tree::kNone) {
      root = head[i - 1];
    } else {
      arena[lowest].left = head[i - 1];
    }
    lowest = head[i - 1];
  }

  for (int j = k; j >= 1; --j) {
    if (cover.is_diagonal(j)) continue;
    const int y = leftmost_occurrence(arena, root, j);
    if (y == Tree::kNone)
      throw Error(ErrorCode::Internal, "no node labeled " + std::to_string(j) + " to attach W_" +
                                           std::to_string(j));
    if (arena[y].left != Tree::kNone)
      throw Error(ErrorCode::Internal,
                  "leftmost occurrence of " + std::to_string(j) + " already has a left child");
    arena[y].left = head[j - 1];
  }
  return Tree::from_arena(std::move(arena), root);
}

Sequence cover_to_modasc(const FishburnCover& cover) {
  const int k = cover.order();
  std::vector<Label> x;
  x.reserve(cover.size());
  for (int i = 1; i <= k; ++i) {
    if (cover.is_diagonal(i)) x.insert(x.end(), cover.block(i).begin(), cover.block(i).end());
  }
  for (int j = k; j >= 1; --j) {
    if (cover.is_diagonal(j)) continue;
    const auto at = std::find(x.begin(), x.end(), j);
    if (at == x.end())
      throw Error(ErrorCode::Internal, "no occurrence of " + std::to_string(j) + " to insert before");
    x.insert(at, cover.block(j).begin(), cover.block(j).end());
  }
  return Sequence(std::move(x));
}

namespace {

// Leftmost-maximum range queries over a fixed word.
class LeftmostMax {
 public:
  explicit LeftmostMax(const Sequence& x) : x_(x) {
    const std::size_t n = x.size();
    table_.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<int>(i);
    for (std::size_t w = 1; (std::size_t{1} << w) <= n; ++w) {
      const std::size_t half = std::size_t{1} << (w - 1);
      std::vector<int> level(n - (std::size_t{1} << w) + 1);
      for (std::size_t i = 0; i < level.size(); ++i)
        level[i] = better(table_[w - 1][i], table_[w - 1][i + half]);
      table_.push_back(std::move(level));
    }
  }

  // Position of the leftmost maximum of x[lo, hi), hi > lo.
  int query(std::size_t lo, std::size_t hi) const {
    const auto w = static_cast<std::size_t>(std::bit_width(hi - lo) - 1);
    return better(table_[w][lo], table_[w][hi - (std::size_t{1} << w)]);
  }

 private:
  int better(int a, int b) const {
    if (x_[a] != x_[b]) return x_[a] > x_[b] ? a : b;
    return std::min(a, b);
  }

  const Sequence& x_;
  std::vector<std::vector<int>> table_;
};

}  // namespace

ModascCover modasc_to_cover(const Sequence& x) {
  require_modasc(x);
  const std::size_t n = x.size();
  ModascCover out;
  out.blabels.assign(n, 0);
  if (n == 0) return out;

  std::vector<bool> ltr_max(n, false);
  Label running = 0;
  for (std::size_t p = 0; p < n; ++p) {
    ltr_max[p] = x[p] > running;
    running = std::max(running, x[p]);
  }

  const LeftmostMax rmq(x);
  enum class Side { Root, Prefix, Suffix };
  struct Segment {
    std::size_t lo, hi;
    int parent;
    Side side;
  };
  std::vector<Segment> stack{{0, n, -1, Side::Root}};
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    const int m = rmq.query(s.lo, s.hi);
    switch (s.side) {
      case Side::Root: out.blabels[m] = x[m]; break;
      case Side::Prefix: out.blabels[m] = ltr_max[s.parent] ? x[m] : x[s.parent]; break;
      case Side::Suffix: out.blabels[m] = out.blabels[s.parent]; break;
    }
    const auto mu = static_cast<std::size_t>(m);
    if (s.lo < mu) stack.push_back({s.lo, mu, m, Side::Prefix});
    if (mu + 1 < s.hi) stack.push_back({mu + 1, s.hi, m, Side::Suffix});
  }

  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(x.max()));
  for (std::size_t p = 0; p < n; ++p) blocks[out.blabels[p] - 1].push_back(x[p]);
  out.cover = FishburnCover::from_blocks(std::move(blocks));
  return out;
}

BurgeWord to_burge(const FishburnCover& cover) {
  BurgeWord w;
  w.columns.reserve(cover.size());
  for (int i = 1; i <= cover.order(); ++i) {
    for (Label j : cover.block(i)) w.columns.push_back({i, j});
  }
  return w;
}

FishburnCover from_burge(const BurgeWord& word) {
  const auto& cols = word.columns;
  for (std::size_t c = 1; c < cols.size(); ++c) {
    const auto& a = cols[c - 1];
    const auto& b = cols[c];
    if (a.top > b.top) throw Error(ErrorCode::InvalidBurge, "top row is not weakly increasing");
    if (a.top == b.top && a.bottom < b.bottom)
      throw Error(ErrorCode::InvalidBurge, "bottom row is not weakly decreasing within top " +
                                               std::to_string(a.top));
  }
  const Label k = cols.empty() ? 0 : cols.back().top;
  if (!cols.empty() && cols.front().top < 1)
    throw Error(ErrorCode::InvalidBurge, "top row holds a non-positive value");
  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(k));
  for (const auto& c : cols) blocks[c.top - 1].push_back(c.bottom);
  for (Label i = 1; i <= k; ++i) {
    if (blocks[i - 1].empty())
      throw Error(ErrorCode::InvalidBurge, "top row misses " + std::to_string(i));
  }
  if (auto why = cover_violation(blocks)) throw Error(ErrorCode::InvalidBurge, *why);
  return FishburnCover::from_blocks(std::move(blocks));
}

}  // namespace fishburn
