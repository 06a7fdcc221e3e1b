#include "fishburn/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "fishburn/cover.hpp"
#include "fishburn/error.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/text_io.hpp"

namespace fishburn {

namespace {

using boost::multiprecision::cpp_int;

constexpr StructureKind kAllKinds[] = {StructureKind::Cayley,       StructureKind::Modasc, StructureKind::Ascseq,
                                       StructureKind::FishburnTree, StructureKind::Cover,  StructureKind::Matrix,
                                       StructureKind::Poset};

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::LimitExceeded, std::string(what) + " must be nonnegative");
}

// Depth-first Cayley words. State: the prefix, value counts, running max and
// the number of values below max not yet used. A prefix is extendable iff
// missing <= remaining positions. With `modified` set, each entry must be
// an ascent top exactly when it is a first occurrence; the condition is
// local, so the walk yields modified ascent sequences directly.
struct CayleyWalker {
  int n;
  bool modified = false;
  std::vector<Label> x;
  std::vector<int> count;
  Label max = 0;
  int missing = 0;

  explicit CayleyWalker(int size, bool modasc = false)
      : n(size), modified(modasc), count(static_cast<std::size_t>(size) + 1, 0) {
    x.reserve(size);
  }

  static CayleyWalker from_prefix(int size, const std::vector<Label>& prefix, bool modasc = false) {
    CayleyWalker w(size, modasc);
    for (Label v : prefix) w.push(v);
    return w;
  }

  void push(Label v) {
    if (v > max) {
      missing += v - max - 1;
      max = v;
    } else if (count[v] == 0) {
      --missing;
    }
    ++count[v];
    x.push_back(v);
  }

  void pop(Label previous_max, int previous_missing) {
    --count[x.back()];
    x.pop_back();
    max = previous_max;
    missing = previous_missing;
  }

  template <class F>
  void run(int target, F&& leaf) {
    if (static_cast<int>(x.size()) == target) {
      leaf(x);
      return;
    }
    const int remaining_after = n - static_cast<int>(x.size()) - 1;
    for (Label v = 1; v <= n; ++v) {
      if (modified && (x.empty() || x.back() < v) != (count[v] == 0)) continue;
      const Label m = max;
      const int miss = missing;
      push(v);
      if (missing <= remaining_after) run(target, leaf);
      pop(m, miss);
    }
  }
};

// Depth-first ascent sequences from the definition: x_1 = 1 and each entry
// is at most one more than the number of ascent tops before it.
struct AscentWalker {
  int n;
  std::vector<Label> x;
  int tops = 0;

  explicit AscentWalker(int size) : n(size) { x.reserve(size); }

  static AscentWalker from_prefix(int size, const std::vector<Label>& prefix) {
    AscentWalker w(size);
    for (Label v : prefix) {
      if (w.x.empty() || w.x.back() < v) ++w.tops;
      w.x.push_back(v);
    }
    return w;
  }

  template <class F>
  void run(int target, F&& leaf) {
    if (static_cast<int>(x.size()) == target) {
      leaf(x);
      return;
    }
    const Label bound = x.empty() ? 1 : tops + 1;
    for (Label v = 1; v <= bound; ++v) {
      const bool top = x.empty() || x.back() < v;
      tops += top;
      x.push_back(v);
      run(target, leaf);
      x.pop_back();
      tops -= top;
    }
  }
};

// Lower-triangular fill of a k x k matrix of total n, row-major. Each entry
// covers at most one row and one column, so max(rows still empty, columns
// still empty) bounds the mass that must remain.
struct MatrixWalker {
  int k;
  Entry remaining;
  std::vector<std::vector<Entry>> rows;
  std::vector<int> column_mass;
  int uncovered;

  MatrixWalker(int n, int dim) : k(dim), remaining(n), column_mass(static_cast<std::size_t>(dim) + 1, 0), uncovered(dim) {
    for (int i = 1; i <= k; ++i) rows.emplace_back(static_cast<std::size_t>(i), 0);
  }

  void set(int i, int j, Entry v) {
    if (v > 0 && column_mass[j]++ == 0) --uncovered;
    rows[i - 1][j - 1] = v;
    remaining -= v;
  }

  void unset(int i, int j, Entry v) {
    if (v > 0 && --column_mass[j] == 0) ++uncovered;
    rows[i - 1][j - 1] = 0;
    remaining += v;
  }

  template <class F>
  void run(int i, int j, bool row_nonzero, F&& leaf) {
    if (i > k) {
      if (remaining == 0 && uncovered == 0) leaf(rows);
      return;
    }
    for (Entry v = 0; v <= remaining; ++v) {
      const bool row_ok = row_nonzero || v > 0;
      if (j == i && !row_ok) continue;
      set(i, j, v);
      const int rows_needed = (k - i) + (row_ok ? 0 : 1);
      if (remaining >= std::max<Entry>(rows_needed, uncovered)) {
        if (j == i) {
          run(i + 1, 1, false, leaf);
        } else {
          run(i, j + 1, row_ok, leaf);
        }
      }
      unset(i, j, v);
    }
  }
};

template <class F>
void each_matrix_rows(int n, F&& leaf) {
  if (n == 0) {
    leaf(std::vector<std::vector<Entry>>{});
    return;
  }
  for (int k = 1; k <= n; ++k) {
    MatrixWalker w(n, k);
    w.run(1, 1, false, leaf);
  }
}

// Independent work units for the parallel matrix count: (k, a11).
std::vector<std::pair<int, Entry>> matrix_units(int n) {
  std::vector<std::pair<int, Entry>> units;
  for (int k = 1; k <= n; ++k) {
    for (Entry a11 = 1; a11 <= n; ++a11) units.emplace_back(k, a11);
  }
  return units;
}

template <class F>
void matrix_unit_rows(int n, int k, Entry a11, F&& leaf) {
  MatrixWalker w(n, k);
  w.set(1, 1, a11);
  if (w.remaining < std::max(k - 1, w.uncovered)) return;
  w.run(2, 1, false, leaf);
}

bool is_sequence_kind(StructureKind kind) {
  return kind == StructureKind::Cayley || kind == StructureKind::Modasc || kind == StructureKind::Ascseq;
}

// Builds the structure of `kind` carried by a matrix and reports whether
// it is well formed. Shared by the serial and parallel counts so that both
// perform the same per-structure work.
bool structure_from_matrix(StructureKind kind, const std::vector<std::vector<Entry>>& rows) {
  const auto a = FishburnMatrix::from_lower_rows(rows);
  if (kind == StructureKind::Matrix) return true;
  const auto cover = matrix_to_cover(a);
  switch (kind) {
    case StructureKind::Cover: return true;
    case StructureKind::FishburnTree: return is_fishburn_tree(cover_to_tree(cover));
    case StructureKind::Poset: return cover_to_poset(cover).size() == cover.size();
    default: return false;
  }
}

std::int64_t count_sequences_in(StructureKind kind, int n, const std::vector<Label>& prefix) {
  std::int64_t total = 0;
  if (kind == StructureKind::Ascseq) {
    AscentWalker::from_prefix(n, prefix).run(n, [&](const std::vector<Label>&) { ++total; });
    return total;
  }
  CayleyWalker::from_prefix(n, prefix, kind == StructureKind::Modasc).run(n, [&](const std::vector<Label>&) {
    ++total;
  });
  return total;
}

std::vector<std::vector<Label>> sequence_prefixes(StructureKind kind, int n, int depth) {
  std::vector<std::vector<Label>> out;
  const auto collect = [&](const std::vector<Label>& p) { out.push_back(p); };
  if (kind == StructureKind::Ascseq) {
    AscentWalker(n).run(depth, collect);
  } else {
    CayleyWalker(n, kind == StructureKind::Modasc).run(depth, collect);
  }
  return out;
}

int thread_count(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace

std::string_view kind_name(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Cayley: return "cayley";
    case StructureKind::Modasc: return "modasc";
    case StructureKind::Ascseq: return "ascseq";
    case StructureKind::FishburnTree: return "fishburn_tree";
    case StructureKind::Cover: return "cover";
    case StructureKind::Matrix: return "matrix";
    case StructureKind::Poset: return "poset";
  }
  return "unknown";
}

std::optional<StructureKind> parse_kind(std::string_view name) noexcept {
  if (name == "tree") return StructureKind::FishburnTree;
  for (auto kind : kAllKinds) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("FISHBURN_MAX_N")) {
    const std::string_view s(raw);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v >= 0) {
      limits.sequence_cap = v;
      limits.structure_cap = v;
    }
  }
  return limits;
}

int Limits::cap(StructureKind kind) const noexcept { return is_sequence_kind(kind) ? sequence_cap : structure_cap; }

void Limits::check(StructureKind kind, int n) const {
  require_nonnegative(n, "n");
  if (n > cap(kind))
    throw Error(ErrorCode::LimitExceeded, std::string(kind_name(kind)) + " is capped at n = " +
                                              std::to_string(cap(kind)) + ", got " + std::to_string(n) +
                                              " (set FISHBURN_MAX_N to raise it)");
}

std::vector<std::int64_t> CountTable::counts() const {
  std::vector<std::int64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.count);
  return out;
}

CountTable fishburn_numbers(int max_n) {
  require_nonnegative(max_n, "N");
  const auto size = static_cast<std::size_t>(max_n) + 1;
  // P holds prod_{k=1}^m (1 - (1-x)^k) truncated at degree max_n; its
  // lowest term has degree m, so coefficient m of the sum is final once
  // P_m has been added.
  std::vector<cpp_int> product(size, 0);
  std::vector<cpp_int> sum(size, 0);
  std::vector<cpp_int> power(size, 0);  // (1-x)^m
  product[0] = 1;
  power[0] = 1;
  CountTable table{"fishburn-gf", {}};
  const cpp_int limit = std::numeric_limits<std::int64_t>::max();
  for (int m = 0; m <= max_n; ++m) {
    if (m > 0) {
      for (std::size_t d = size - 1; d >= 1; --d) power[d] -= power[d - 1];
      std::vector<cpp_int> factor(size);
      for (std::size_t d = 0; d < size; ++d) factor[d] = -power[d];
      factor[0] += 1;
      std::vector<cpp_int> next(size, 0);
      for (std::size_t a = 0; a < size; ++a) {
        if (product[a] == 0) continue;
        for (std::size_t b = 0; a + b < size; ++b) next[a + b] += product[a] * factor[b];
      }
      product = std::move(next);
    }
    for (std::size_t d = 0; d < size; ++d) sum[d] += product[d];
    if (sum[m] > limit || sum[m] < 0)
      throw Error(ErrorCode::Overflow, "Fishburn number F_" + std::to_string(m) + " exceeds the 64-bit range");
    table.rows.push_back({m, static_cast<std::int64_t>(sum[m])});
  }
  return table;
}

CountTable fubini_numbers(int max_n) {
  require_nonnegative(max_n, "N");
  CountTable table{"fubini", {{0, 1}}};
  std::vector<std::int64_t> a{1};
  std::vector<std::int64_t> binom{1};  // row n of Pascal's triangle
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      if (__builtin_add_overflow(binom[k - 1], binom[k], &row[k]))
        throw Error(ErrorCode::Overflow, "binomial overflow at n = " + std::to_string(n));
    }
    binom = std::move(row);
    std::int64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      std::int64_t term = 0;
      if (__builtin_mul_overflow(binom[k], a[n - k], &term) || __builtin_add_overflow(total, term, &total))
        throw Error(ErrorCode::Overflow, "Fubini number a(" + std::to_string(n) + ") exceeds the 64-bit range");
    }
    a.push_back(total);
    table.rows.push_back({n, total});
  }
  return table;
}

void for_each_cayley(int n, const std::function<void(const Sequence&)>& visit) {
  require_nonnegative(n, "n");
  CayleyWalker(n).run(n, [&](const std::vector<Label>& x) { visit(Sequence(x)); });
}

void for_each_modasc(int n, const std::function<void(const Sequence&)>& visit) {
  require_nonnegative(n, "n");
  CayleyWalker(n, true).run(n, [&](const std::vector<Label>& x) { visit(Sequence(x)); });
}

void for_each_ascent_sequence(int n, const std::function<void(const Sequence&)>& visit) {
  require_nonnegative(n, "n");
  AscentWalker(n).run(n, [&](const std::vector<Label>& x) { visit(Sequence(x)); });
}

void for_each_fishburn_matrix(int n, const std::function<void(const FishburnMatrix&)>& visit) {
  require_nonnegative(n, "n");
  each_matrix_rows(n, [&](const std::vector<std::vector<Entry>>& rows) {
    visit(FishburnMatrix::from_lower_rows(rows));
  });
}

void for_each_endofunction(int n, const std::function<void(const Sequence&)>& visit) {
  require_nonnegative(n, "n");
  std::vector<Label> x(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(Sequence(x));
    int i = n - 1;
    while (i >= 0 && x[i] == n) x[i--] = 1;
    if (i < 0) return;
    ++x[i];
  }
}

namespace {

// Endotrees of `size` nodes with every label at most `bound`: the root r is
// at most bound, the left subtree uses labels below r, the right at most r.
void endotrees(int size, Label bound, const std::function<void(const Tree&)>& visit) {
  if (size == 0) {
    visit(Tree{});
    return;
  }
  for (Label r = 1; r <= bound; ++r) {
    for (int left = 0; left < size; ++left) {
      if (left > 0 && r == 1) break;
      endotrees(left, r - 1, [&](const Tree& l) {
        endotrees(size - 1 - left, r, [&](const Tree& rt) { visit(Tree::join(l, r, rt)); });
      });
    }
  }
}

}  // namespace

void for_each_endotree(int n, const std::function<void(const Tree&)>& visit) {
  require_nonnegative(n, "n");
  endotrees(n, n, visit);
}

std::vector<std::string> enumerate(StructureKind kind, int n, const Limits& limits) {
  limits.check(kind, n);
  std::vector<std::string> out;
  const auto add_sequence = [&](const Sequence& x) { out.push_back(text::format_sequence(x)); };
  switch (kind) {
    case StructureKind::Cayley: for_each_cayley(n, add_sequence); break;
    case StructureKind::Modasc: for_each_modasc(n, add_sequence); break;
    case StructureKind::Ascseq: for_each_ascent_sequence(n, add_sequence); break;
    default:
      for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
        if (kind == StructureKind::Matrix) {
          out.push_back(text::one_line(text::format_matrix(a)));
          return;
        }
        const auto cover = matrix_to_cover(a);
        if (kind == StructureKind::Cover) {
          out.push_back(text::format_cover(cover));
        } else if (kind == StructureKind::FishburnTree) {
          out.push_back(text::format_tree(cover_to_tree(cover)));
        } else {
          out.push_back(text::one_line(text::format_poset(cover_to_poset(cover))));
        }
      });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_serial(StructureKind kind, int n) {
  require_nonnegative(n, "n");
  if (is_sequence_kind(kind)) return count_sequences_in(kind, n, {});
  std::int64_t total = 0;
  each_matrix_rows(n, [&](const std::vector<std::vector<Entry>>& rows) { total += structure_from_matrix(kind, rows); });
  return total;
}

std::int64_t count_parallel(StructureKind kind, int n, int jobs) {
  require_nonnegative(n, "n");
  const int threads = thread_count(jobs);
  std::int64_t total = 0;
  if (is_sequence_kind(kind)) {
    const auto prefixes = sequence_prefixes(kind, n, std::min(n, 3));
    const auto units = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads) if (threads != 1)
    for (std::ptrdiff_t u = 0; u < units; ++u) total += count_sequences_in(kind, n, prefixes[u]);
    return total;
  }
  if (n == 0) return 1;
  const auto units = matrix_units(n);
  const auto size = static_cast<std::ptrdiff_t>(units.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads) if (threads != 1)
  for (std::ptrdiff_t u = 0; u < size; ++u) {
    std::int64_t local = 0;
    matrix_unit_rows(n, units[u].first, units[u].second,
                     [&](const std::vector<std::vector<Entry>>& rows) { local += structure_from_matrix(kind, rows); });
    total += local;
  }
  return total;
}

CountTable count_table(StructureKind kind, int max_n, int jobs, const Limits& limits) {
  limits.check(kind, max_n);
  CountTable table{std::string(kind_name(kind)), {}};
  for (int n = 0; n <= max_n; ++n)
    table.rows.push_back({n, jobs == 1 ? count_serial(kind, n) : count_parallel(kind, n, jobs)});
  return table;
}

}  // namespace fishburn
