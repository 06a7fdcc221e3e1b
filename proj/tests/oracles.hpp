#pragma once

// Brute-force oracles written directly from the definitions, sharing no
// code with the library's pruned generators.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

// Every word in [n]^n, odometer order.
inline void each_endofunction(int n, const std::function<void(const Word&)>& visit) {
  Word x(static_cast<std::size_t>(n), 1);
  for (;;) {
    visit(x);
    int i = n - 1;
    while (i >= 0 && x[i] == n) x[i--] = 1;
    if (i < 0) return;
    ++x[i];
  }
}

inline bool cayley(const Word& x) {
  int m = 0;
  for (int v : x) m = v > m ? v : m;
  std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
  for (int v : x) hit[v] = true;
  for (int v = 1; v <= m; ++v)
    if (!hit[v]) return false;
  return true;
}

// x_1 = 1 and x_{i+1} <= 1 + asc(x_1 .. x_i), counting ascents x_j < x_{j+1}.
inline bool ascent(const Word& x) {
  if (x.empty()) return true;
  if (x[0] != 1) return false;
  int asc = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > asc + 2) return false;
    if (x[i - 1] < x[i]) ++asc;
  }
  return true;
}

// Cayley and every position is an ascent top exactly when it is the first
// occurrence of its value.
inline bool modasc(const Word& x) {
  if (!cayley(x)) return false;
  std::vector<bool> seen(x.size() + 2, false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool top = i == 0 || x[i - 1] < x[i];
    const bool first = !seen[x[i]];
    seen[x[i]] = true;
    if (top != first) return false;
  }
  return true;
}

inline std::int64_t count_if(int n, bool (*pred)(const Word&)) {
  std::int64_t c = 0;
  each_endofunction(n, [&](const Word& x) { c += pred(x); });
  return c;
}

inline std::string compact(const Word& x) {
  std::string s;
  for (int v : x) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace oracle
