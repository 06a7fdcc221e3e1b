#include "fishburn/sequence.hpp"

#include <algorithm>
#include <string>

#include "fishburn/error.hpp"

namespace fishburn {

Label Sequence::max() const noexcept {
  Label m = 0;
  for (Label v : entries_) m = std::max(m, v);
  return m;
}

namespace {

bool all_positive(const Sequence& x) {
  return std::all_of(x.begin(), x.end(), [](Label v) { return v >= 1; });
}

// Positions (0-based) that are leftmost occurrences of their value.
std::vector<bool> first_occurrences(const Sequence& x) {
  std::vector<bool> seen(static_cast<std::size_t>(x.max()) + 1, false);
  std::vector<bool> first(x.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!seen[x[i]]) {
      seen[x[i]] = true;
      first[i] = true;
    }
  }
  return first;
}

}  // namespace

bool is_endofunction(const Sequence& x) {
  const auto n = static_cast<Label>(x.size());
  return std::all_of(x.begin(), x.end(), [n](Label v) { return v >= 1 && v <= n; });
}

bool is_cayley(const Sequence& x) {
  if (!all_positive(x)) return false;
  const Label m = x.max();
  if (static_cast<std::size_t>(m) > x.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (Label v : x) seen[v] = true;
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

bool is_ascent_sequence(const Sequence& x) {
  if (x.empty()) return true;
  if (!is_endofunction(x) || x[0] != 1) return false;
  int ascent_tops = 1;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > ascent_tops + 1) return false;
    if (x[i - 1] < x[i]) ++ascent_tops;
  }
  return true;
}

bool is_modified_ascent_sequence(const Sequence& x) {
  if (!is_cayley(x)) return false;
  const auto first = first_occurrences(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool ascent_top = i == 0 || x[i - 1] < x[i];
    if (ascent_top != first[i]) return false;
  }
  return true;
}

SequenceClass classify(const Sequence& x) {
  SequenceClass c;
  c.is_endofunction = is_endofunction(x);
  c.is_cayley = is_cayley(x);
  c.is_ascent_sequence = is_ascent_sequence(x);
  c.is_modified_ascent_sequence = is_modified_ascent_sequence(x);
  c.is_primitive = std::adjacent_find(x.begin(), x.end()) == x.end();
  c.max = x.max();
  return c;
}

IndexedEntrySet asctops(const Sequence& x) {
  IndexedEntrySet out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == 0 || x[i - 1] < x[i]) out.push_back({static_cast<int>(i + 1), x[i]});
  }
  return out;
}

IndexedEntrySet nub(const Sequence& x) {
  if (!is_cayley(x)) throw Error(ErrorCode::NotCayley, "nub requires the values to form [max]");
  const auto first = first_occurrences(x);
  IndexedEntrySet out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (first[i]) out.push_back({static_cast<int>(i + 1), x[i]});
  }
  return out;
}

MaxDecomposition max_decomposition(const Sequence& x) {
  if (x.empty()) throw Error(ErrorCode::Empty, "max-decomposition of the empty sequence");
  const auto it = std::max_element(x.begin(), x.end());  // leftmost maximum
  const auto m = static_cast<std::size_t>(it - x.begin());
  const auto& e = x.entries();
  return MaxDecomposition{Sequence(std::vector<Label>(e.begin(), e.begin() + m)), *it,
                          static_cast<int>(m + 1),
                          Sequence(std::vector<Label>(e.begin() + m + 1, e.end()))};
}

Ballot to_ballot(const Sequence& x) {
  if (!is_cayley(x)) throw Error(ErrorCode::NotCayley, "ballot encoding requires a Cayley permutation");
  Ballot b;
  b.blocks.resize(static_cast<std::size_t>(x.max()));
  for (std::size_t i = 0; i < x.size(); ++i) b.blocks[x[i] - 1].push_back(static_cast<int>(i + 1));
  return b;
}

Sequence from_ballot(const Ballot& ballot) {
  std::size_t n = 0;
  for (const auto& block : ballot.blocks) n += block.size();
  std::vector<Label> values(n, 0);
  for (std::size_t b = 0; b < ballot.blocks.size(); ++b) {
    if (ballot.blocks[b].empty()) throw Error(ErrorCode::NotCayley, "ballot has an empty block");
    for (int pos : ballot.blocks[b]) {
      if (pos < 1 || static_cast<std::size_t>(pos) > n || values[pos - 1] != 0)
        throw Error(ErrorCode::NotCayley, "ballot blocks do not partition [n]");
      values[pos - 1] = static_cast<Label>(b + 1);
    }
  }
  return Sequence(std::move(values));
}

void require_modasc(const Sequence& x) {
  if (!is_cayley(x))
    throw Error(ErrorCode::NotModasc, "not a Cayley permutation (values must form [max])");
  if (!is_modified_ascent_sequence(x))
    throw Error(ErrorCode::NotModasc, "ascent tops differ from leftmost occurrences");
}

}  // namespace fishburn
