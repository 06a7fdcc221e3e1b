#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fishburn/sequence.hpp"

namespace fishburn {

/// A node addressed by its 1-based position in the in-order traversal.
struct NodeRef {
  int in_order_index;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

/// Vertex-labeled binary tree stored as an arena whose slots are numbered in
/// in-order: slot i is the node v_{i+1}. Any two equal trees therefore have
/// identical arenas, and equality is plain vector equality.
///
/// All traversals are iterative; trees may be as deep as they are large.
class Tree {
 public:
  static constexpr int kNone = -1;

  struct Node {
    Label label = 0;
    int left = kNone;
    int right = kNone;

    friend bool operator==(const Node&, const Node&) = default;
  };

  Tree() = default;

  static Tree leaf(Label label);
  /// The tree (left, label, right).
  static Tree join(const Tree& left, Label label, const Tree& right);
  /// Builds from an arbitrary arena (children referenced by slot) and
  /// renumbers the slots into in-order. Throws INTERNAL on a malformed arena.
  static Tree from_arena(std::vector<Node> arena, int root);

  bool empty() const noexcept { return nodes_.empty(); }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int root() const noexcept { return root_; }
  const Node& node(int slot) const { return nodes_[slot]; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  Label label(NodeRef v) const { return nodes_[v.in_order_index - 1].label; }
  /// 0 for the empty tree.
  Label max_label() const noexcept;

  /// parent slot of each slot (kNone for the root).
  std::vector<int> parents() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<Node> nodes_;
  int root_ = kNone;
};

struct TreeClass {
  bool decreasing = true;
  bool strictly_left_decreasing = true;
  bool endotree = true;
  bool regular = true;
  bool fishburn = true;
  bool comb_shaped = true;
  bool strictly_decreasing = true;
};

struct TreetopsUnseen {
  std::vector<NodeRef> treetops;
  std::vector<NodeRef> unseen;
};

/// Maximal-right-path decomposition of a Fishburn tree.
struct RPathDecomposition {
  int k = 0;
  /// paths[i-1] is W_i, listed top to bottom.
  std::vector<std::vector<NodeRef>> paths;
  /// blabels[p-1] is the index of the path through v_p.
  std::vector<Label> blabels;
  /// Indices i whose path W_i starts on the left path of the root; ascending.
  std::vector<Label> diagonal;
};

Sequence in_order(const Tree& t);

/// Max-decomposition tree; inverse of in_order on endofunctions.
/// Throws NOT_ENDOFUNCTION.
Tree seq_to_tree(const Sequence& x);

/// Same recursion without the endofunction check; any word of positive
/// integers yields a decreasing, strictly-left-decreasing tree.
Tree cartesian_tree(const Sequence& x);

TreeClass classify_tree(const Tree& t);
bool is_fishburn_tree(const Tree& t);
/// First violated condition among endotree, regular and treetops = unseen,
/// or nullopt for a Fishburn tree.
std::optional<std::string> fishburn_violation(const Tree& t);

TreetopsUnseen treetops_and_unseen(const Tree& t);

/// Throws NOT_FISHBURN.
RPathDecomposition rpath_decomposition(const Tree& t);

}  // namespace fishburn
