#include "fishburn/poset.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "fishburn/error.hpp"

namespace fishburn {

using Bits = boost::dynamic_bitset<>;

std::optional<std::string> poset_violation(const std::vector<PosetElement>& elements) {
  Label k = 0;
  for (const auto& e : elements) k = std::max(k, e.b);
  std::vector<bool> has_level(static_cast<std::size_t>(k) + 1, false);
  std::vector<bool> has_b(static_cast<std::size_t>(k) + 1, false);
  for (const auto& e : elements) {
    if (e.level < 1 || e.level > e.b)
      return "element (" + std::to_string(e.b) + "," + std::to_string(e.level) +
             ") violates 1 <= level <= b";
    has_level[e.level] = true;
    has_b[e.b] = true;
  }
  for (Label i = 1; i <= k; ++i) {
    if (!has_level[i]) return "level " + std::to_string(i) + " is empty";
    if (!has_b[i]) return "no element has b = " + std::to_string(i);
  }
  return std::nullopt;
}

IntervalPoset IntervalPoset::from_elements(std::vector<PosetElement> elements) {
  if (auto why = poset_violation(elements)) throw Error(ErrorCode::InvalidPoset, *why);
  std::sort(elements.begin(), elements.end(), burge_less);
  IntervalPoset q;
  for (const auto& e : elements) q.levels_ = std::max(q.levels_, e.b);
  q.elements_ = std::move(elements);
  return q;
}

IntervalPoset tree_to_poset(const Tree& t) {
  const auto d = rpath_decomposition(t);
  std::vector<PosetElement> elements;
  elements.reserve(t.nodes().size());
  for (int v = 0; v < t.size(); ++v) elements.push_back({d.blabels[v], t.node(v).label});
  return IntervalPoset::from_elements(std::move(elements));
}

FishburnCover poset_to_cover(const IntervalPoset& q) {
  std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(q.levels()));
  for (const auto& e : q.elements()) blocks[e.b - 1].push_back(e.level);
  if (auto why = cover_violation(blocks)) throw Error(ErrorCode::InvalidPoset, *why);
  return FishburnCover::from_blocks(std::move(blocks));
}

IntervalPoset cover_to_poset(const FishburnCover& cover) {
  std::vector<PosetElement> elements;
  elements.reserve(cover.size());
  for (int i = 1; i <= cover.order(); ++i) {
    for (Label j : cover.block(i)) elements.push_back({i, j});
  }
  return IntervalPoset::from_elements(std::move(elements));
}

Tree poset_to_tree(const IntervalPoset& q) { return cover_to_tree(poset_to_cover(q)); }

namespace {

// Canonical labels from transitively closed strict down-sets.
IntervalPoset label_from_downsets(const std::vector<Bits>& down) {
  const std::size_t n = down.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return down[a].count() < down[b].count(); });

  // Distinct down-sets, smallest first; must form a chain.
  std::vector<std::size_t> representative;
  std::vector<Label> level(n, 0);
  for (std::size_t u : order) {
    if (!representative.empty() && down[representative.back()] == down[u]) {
      level[u] = static_cast<Label>(representative.size());
      continue;
    }
    if (!representative.empty()) {
      const std::size_t r = representative.back();
      if (!down[r].is_subset_of(down[u])) {
        const std::size_t a = (down[r] - down[u]).find_first();
        const std::size_t c = (down[u] - down[r]).find_first();
        throw Error(ErrorCode::NotTwoPlusTwoFree,
                    "down-sets of elements " + std::to_string(r + 1) + " and " + std::to_string(u + 1) +
                        " are incomparable; " + std::to_string(a + 1) + "<" + std::to_string(r + 1) +
                        " and " + std::to_string(c + 1) + "<" + std::to_string(u + 1) +
                        " induce 2+2");
      }
    }
    representative.push_back(u);
    level[u] = static_cast<Label>(representative.size());
  }

  const auto k = static_cast<Label>(representative.size());
  std::vector<PosetElement> elements(n);
  for (std::size_t u = 0; u < n; ++u) {
    // b(u) = min{i : u in D_i} - 1, with D_{k+1} the whole poset.
    Label b = k;
    for (Label i = 1; i <= k; ++i) {
      if (down[representative[i - 1]].test(u)) {
        b = i - 1;
        break;
      }
    }
    elements[u] = {b, level[u]};
  }
  return IntervalPoset::from_elements(std::move(elements));
}

}  // namespace

IntervalPoset poset_from_relation(const RelationInput& relation) {
  if (relation.n < 0) throw Error(ErrorCode::NotAPartialOrder, "negative element count");
  const auto n = static_cast<std::size_t>(relation.n);
  std::vector<Bits> down(n, Bits(n));
  for (const auto& [u, v] : relation.less_pairs) {
    if (u < 1 || v < 1 || u > relation.n || v > relation.n)
      throw Error(ErrorCode::NotAPartialOrder,
                  "pair " + std::to_string(u) + "<" + std::to_string(v) + " is out of range");
    down[v - 1].set(u - 1);
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t v = 0; v < n; ++v) {
      if (down[v].test(w)) down[v] |= down[w];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (down[v].test(v))
      throw Error(ErrorCode::NotAPartialOrder, "element " + std::to_string(v + 1) + " lies on a cycle");
  }
  return label_from_downsets(down);
}

RelationInput relation_of(const IntervalPoset& q) {
  RelationInput r;
  r.n = static_cast<int>(q.size());
  for (std::size_t u = 0; u < q.size(); ++u) {
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (q.less(u, v)) r.less_pairs.emplace_back(static_cast<int>(u + 1), static_cast<int>(v + 1));
    }
  }
  return r;
}

IntervalPoset dual(const IntervalPoset& q) {
  const std::size_t n = q.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (q.less(v, u)) down[v].set(u);  // reversed: u precedes v
    }
  }
  return label_from_downsets(down);
}

int longest_chain(const IntervalPoset& q) {
  // Levels in increasing order; every predecessor of a level-l element has
  // b < l, hence level < l, so it is already settled.
  const int k = q.levels();
  std::vector<std::vector<Label>> b_by_level(static_cast<std::size_t>(k) + 1);
  for (const auto& e : q.elements()) b_by_level[e.level].push_back(e.b);
  std::vector<int> best_with_b(static_cast<std::size_t>(k) + 1, 0);
  int below = 0;  // longest chain ending at some element with b < level
  int overall = 0;
  for (Label level = 1; level <= k; ++level) {
    below = std::max(below, best_with_b[level - 1]);
    for (Label b : b_by_level[level]) {
      best_with_b[b] = std::max(best_with_b[b], below + 1);
      overall = std::max(overall, below + 1);
    }
  }
  return overall;
}

PosetClass classify_poset(const IntervalPoset& q) {
  PosetClass c;
  const auto& e = q.elements();
  c.is_primitive = std::adjacent_find(e.begin(), e.end()) == e.end();
  c.has_max_chain = longest_chain(q) == q.levels();
  return c;
}

std::vector<std::pair<int, int>> cover_relation(const IntervalPoset& q) {
  const int k = q.levels();
  // min_b_above[t] = least b among elements whose level exceeds t.
  std::vector<Label> min_b_above(static_cast<std::size_t>(k) + 2, k + 1);
  for (const auto& e : q.elements()) {
    for (Label t = 0; t < e.level; ++t) min_b_above[t] = std::min(min_b_above[t], e.b);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < q.size(); ++u) {
    for (std::size_t v = 0; v < q.size(); ++v) {
      const auto& eu = q.elements()[u];
      const auto& ev = q.elements()[v];
      if (eu.b < ev.level && min_b_above[eu.b] >= ev.level)
        edges.emplace_back(static_cast<int>(u + 1), static_cast<int>(v + 1));
    }
  }
  return edges;
}

bool satisfies_order_axioms(const IntervalPoset& q) {
  const std::size_t n = q.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (q.less(u, u)) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (q.less(u, v) && q.less(v, u)) return false;
      for (std::size_t w = 0; w < n; ++w) {
        if (q.less(u, v) && q.less(v, w) && !q.less(u, w)) return false;
      }
    }
  }
  // Down-sets pairwise comparable under inclusion.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool a_in_b = true;
      bool b_in_a = true;
      for (std::size_t w = 0; w < n; ++w) {
        if (q.less(w, a) && !q.less(w, b)) a_in_b = false;
        if (q.less(w, b) && !q.less(w, a)) b_in_a = false;
      }
      if (!a_in_b && !b_in_a) return false;
    }
  }
  return true;
}

}  // namespace fishburn
