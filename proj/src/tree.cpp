#include "fishburn/tree.hpp"

#include <algorithm>
#include <string>

#include "fishburn/error.hpp"

namespace fishburn {

namespace {

// Slots in pre-order (parents before children).
std::vector<int> preorder(const std::vector<Tree::Node>& nodes, int root) {
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<int> stack;
  if (root != Tree::kNone) stack.push_back(root);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    if (nodes[v].right != Tree::kNone) stack.push_back(nodes[v].right);
    if (nodes[v].left != Tree::kNone) stack.push_back(nodes[v].left);
  }
  return order;
}

// Maximum label in each subtree; 0 for absent subtrees.
std::vector<Label> subtree_max(const Tree& t) {
  std::vector<Label> m(t.nodes().size(), 0);
  const auto order = preorder(t.nodes(), t.root());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& n = t.node(*it);
    Label best = n.label;
    if (n.left != Tree::kNone) best = std::max(best, m[n.left]);
    if (n.right != Tree::kNone) best = std::max(best, m[n.right]);
    m[*it] = best;
  }
  return m;
}

// Slots on the left path of the root.
std::vector<bool> diagonal_slots(const Tree& t) {
  std::vector<bool> diag(t.nodes().size(), false);
  for (int v = t.root(); v != Tree::kNone; v = t.node(v).left) diag[v] = true;
  return diag;
}

}  // namespace

Tree Tree::leaf(Label label) {
  Tree t;
  t.nodes_.push_back(Node{label, kNone, kNone});
  t.root_ = 0;
  return t;
}

Tree Tree::join(const Tree& left, Label label, const Tree& right) {
  Tree t;
  const int offset = left.size() + 1;
  t.nodes_.reserve(static_cast<std::size_t>(left.size() + right.size() + 1));
  t.nodes_ = left.nodes_;
  t.nodes_.push_back(Node{label, left.root_, kNone});
  for (Node n : right.nodes_) {
    if (n.left != kNone) n.left += offset;
    if (n.right != kNone) n.right += offset;
    t.nodes_.push_back(n);
  }
  t.root_ = left.size();
  if (!right.empty()) t.nodes_[t.root_].right = right.root_ + offset;
  return t;
}

Tree Tree::from_arena(std::vector<Node> arena, int root) {
  const int n = static_cast<int>(arena.size());
  if (n == 0) {
    if (root != kNone) throw Error(ErrorCode::Internal, "root given for an empty arena");
    return Tree{};
  }
  if (root < 0 || root >= n) throw Error(ErrorCode::Internal, "root slot out of range");

  // Iterative in-order walk; also detects sharing and cycles.
  std::vector<int> rank(arena.size(), kNone);
  std::vector<bool> visited(arena.size(), false);
  std::vector<int> stack;
  int next = 0;
  int cur = root;
  while (cur != kNone || !stack.empty()) {
    while (cur != kNone) {
      if (cur < 0 || cur >= n || visited[cur])
        throw Error(ErrorCode::Internal, "arena is not a tree");
      visited[cur] = true;
      stack.push_back(cur);
      cur = arena[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    rank[cur] = next++;
    cur = arena[cur].right;
  }
  if (next != n) throw Error(ErrorCode::Internal, "arena has unreachable slots");

  Tree t;
  t.nodes_.resize(arena.size());
  for (int v = 0; v < n; ++v) {
    Node m = arena[v];
    if (m.left != kNone) m.left = rank[m.left];
    if (m.right != kNone) m.right = rank[m.right];
    t.nodes_[rank[v]] = m;
  }
  t.root_ = rank[root];
  return t;
}

Label Tree::max_label() const noexcept {
  Label m = 0;
  for (const auto& n : nodes_) m = std::max(m, n.label);
  return m;
}

std::vector<int> Tree::parents() const {
  std::vector<int> p(nodes_.size(), kNone);
  for (int v = 0; v < size(); ++v) {
    if (nodes_[v].left != kNone) p[nodes_[v].left] = v;
    if (nodes_[v].right != kNone) p[nodes_[v].right] = v;
  }
  return p;
}

Sequence in_order(const Tree& t) {
  // Slots are already in in-order.
  std::vector<Label> out;
  out.reserve(t.nodes().size());
  for (const auto& n : t.nodes()) out.push_back(n.label);
  return Sequence(std::move(out));
}

Tree cartesian_tree(const Sequence& x) {
  // Slot i holds x_{i+1}: the in-order of the result is x itself.
  std::vector<Tree::Node> arena(x.size());
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    arena[i].label = x[i];
    int last = Tree::kNone;
    // Equal values stay on the stack: the leftmost maximum is the ancestor.
    while (!stack.empty() && x[stack.back()] < x[i]) {
      last = stack.back();
      stack.pop_back();
    }
    arena[i].left = last;
    if (!stack.empty()) arena[stack.back()].right = i;
    stack.push_back(i);
  }
  return Tree::from_arena(std::move(arena), stack.empty() ? Tree::kNone : stack.front());
}

Tree seq_to_tree(const Sequence& x) {
  if (!is_endofunction(x))
    throw Error(ErrorCode::NotEndofunction, "every value must lie in [n] for n = " +
                                                std::to_string(x.size()));
  return cartesian_tree(x);
}

TreetopsUnseen treetops_and_unseen(const Tree& t) {
  TreetopsUnseen out;
  std::vector<bool> seen(static_cast<std::size_t>(t.max_label()) + 1, false);
  for (int v = 0; v < t.size(); ++v) {
    const auto& n = t.node(v);
    if (v == 0 || n.left != Tree::kNone) out.treetops.push_back(NodeRef{v + 1});
    if (n.label >= 1 && !seen[n.label]) {
      seen[n.label] = true;
      out.unseen.push_back(NodeRef{v + 1});
    }
  }
  return out;
}

TreeClass classify_tree(const Tree& t) {
  TreeClass c;
  if (t.empty()) return c;
  const auto m = subtree_max(t);
  const auto diag = diagonal_slots(t);
  const Label n = t.size();
  bool labels_in_range = true;
  for (int v = 0; v < t.size(); ++v) {
    const auto& node = t.node(v);
    const Label lmax = node.left == Tree::kNone ? 0 : m[node.left];
    const Label rmax = node.right == Tree::kNone ? 0 : m[node.right];
    if (node.label < lmax || node.label < rmax) c.decreasing = false;
    if (node.label <= lmax) c.strictly_left_decreasing = false;
    if (node.label <= lmax || node.label <= rmax) c.strictly_decreasing = false;
    if (node.label < 1 || node.label > n) labels_in_range = false;
    if (!diag[v] && node.left != Tree::kNone) c.comb_shaped = false;
  }
  c.endotree = c.decreasing && c.strictly_left_decreasing && labels_in_range;

  c.regular = c.endotree;
  if (c.regular) {
    std::vector<bool> seen(static_cast<std::size_t>(t.max_label()) + 1, false);
    for (const auto& node : t.nodes()) seen[node.label] = true;
    c.regular = std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  }

  c.fishburn = c.regular;
  if (c.fishburn) {
    const auto tu = treetops_and_unseen(t);
    c.fishburn = tu.treetops == tu.unseen;
  }
  return c;
}

bool is_fishburn_tree(const Tree& t) { return classify_tree(t).fishburn; }

std::optional<std::string> fishburn_violation(const Tree& t) {
  if (t.empty()) return std::nullopt;
  const auto m = subtree_max(t);
  const auto node_name = [&](int v) {
    return "v" + std::to_string(v + 1) + " (label " + std::to_string(t.node(v).label) + ")";
  };
  for (int v = 0; v < t.size(); ++v) {
    const auto& node = t.node(v);
    if (node.label < 1 || node.label > t.size())
      return "not an endotree: " + node_name(v) + " lies outside [1, " + std::to_string(t.size()) + "]";
    if (node.left != Tree::kNone && m[node.left] >= node.label)
      return "not an endotree: " + node_name(v) + " has a left descendant labeled " + std::to_string(m[node.left]) +
             ", but labels must strictly decrease to the left";
    if (node.right != Tree::kNone && m[node.right] > node.label)
      return "not an endotree: " + node_name(v) + " has a right descendant labeled " +
             std::to_string(m[node.right]) + ", but labels must decrease toward the leaves";
  }
  const Label k = t.max_label();
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (const auto& node : t.nodes()) seen[node.label] = true;
  for (Label j = 1; j <= k; ++j) {
    if (!seen[j]) return "not regular: label " + std::to_string(j) + " is missing from [1, max]";
  }
  const auto tu = treetops_and_unseen(t);
  std::vector<int> kind(t.nodes().size(), 0);  // bit 0 treetop, bit 1 unseen
  for (auto r : tu.treetops) kind[r.in_order_index - 1] |= 1;
  for (auto r : tu.unseen) kind[r.in_order_index - 1] |= 2;
  for (int v = 0; v < t.size(); ++v) {
    if (kind[v] == 1)
      return "treetops != unseen: " + node_name(v) + " is a treetop but not the leftmost node with its label";
    if (kind[v] == 2)
      return "treetops != unseen: " + node_name(v) + " is the leftmost node with its label but not a treetop";
  }
  return std::nullopt;
}

RPathDecomposition rpath_decomposition(const Tree& t) {
  if (auto why = fishburn_violation(t)) throw Error(ErrorCode::NotFishburn, *why);
  RPathDecomposition d;
  d.k = t.max_label();
  d.paths.resize(static_cast<std::size_t>(d.k));
  d.blabels.assign(t.nodes().size(), 0);
  if (t.empty()) return d;

  const auto diag = diagonal_slots(t);
  d.blabels[t.root()] = t.node(t.root()).label;
  for (int u : preorder(t.nodes(), t.root())) {
    const auto& node = t.node(u);
    if (node.right != Tree::kNone) d.blabels[node.right] = d.blabels[u];
    if (node.left != Tree::kNone)
      d.blabels[node.left] = diag[u] ? t.node(node.left).label : node.label;
  }
  // Along a right path the in-order visits nodes top to bottom.
  for (int v = 0; v < t.size(); ++v) d.paths[d.blabels[v] - 1].push_back(NodeRef{v + 1});
  for (Label i = 1; i <= d.k; ++i) {
    if (diag[d.paths[i - 1].front().in_order_index - 1]) d.diagonal.push_back(i);
  }
  return d;
}

}  // namespace fishburn
