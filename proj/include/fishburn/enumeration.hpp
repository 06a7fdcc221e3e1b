#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/matrix.hpp"
#include "fishburn/sequence.hpp"
#include "fishburn/tree.hpp"

namespace fishburn {

enum class StructureKind { Cayley, Modasc, Ascseq, FishburnTree, Cover, Matrix, Poset };

std::string_view kind_name(StructureKind kind) noexcept;
/// Accepts the names above plus "tree" for fishburn_tree.
std::optional<StructureKind> parse_kind(std::string_view name) noexcept;

/// Largest n accepted by enumerate/count per kind. FISHBURN_MAX_N, when set
/// to a nonnegative integer, overrides both caps.
struct Limits {
  int sequence_cap = 9;   // cayley, modasc, ascseq
  int structure_cap = 8;  // matrix, cover, tree, poset

  static Limits from_env();
  int cap(StructureKind kind) const noexcept;
  /// Throws LIMIT_EXCEEDED.
  void check(StructureKind kind, int n) const;
};

struct CountRow {
  int n;
  std::int64_t count;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountTable {
  std::string kind;
  std::vector<CountRow> rows;

  std::vector<std::int64_t> counts() const;
};

/// Coefficients of sum_n prod_{k=1}^n (1 - (1-x)^k) through degree N, by
/// exact series arithmetic. Throws OVERFLOW once a coefficient leaves the
/// int64 range (first at N = 24).
CountTable fishburn_numbers(int max_n);

/// Ordered set partitions a(n) = sum_k C(n,k) a(n-k). Throws OVERFLOW
/// (first at N = 19).
CountTable fubini_numbers(int max_n);

// Serial reference generators. Each structure of size n is visited once, in
// generation order (not the canonical text order).
void for_each_cayley(int n, const std::function<void(const Sequence&)>& visit);
void for_each_modasc(int n, const std::function<void(const Sequence&)>& visit);
void for_each_ascent_sequence(int n, const std::function<void(const Sequence&)>& visit);
void for_each_fishburn_matrix(int n, const std::function<void(const FishburnMatrix&)>& visit);
/// Every endofunction of length n (n^n of them).
void for_each_endofunction(int n, const std::function<void(const Sequence&)>& visit);
/// Every endotree of size n, built directly from the tree definition.
void for_each_endotree(int n, const std::function<void(const Tree&)>& visit);

/// Canonical one-line encodings of every structure of size n, sorted
/// lexicographically. Throws LIMIT_EXCEEDED.
std::vector<std::string> enumerate(StructureKind kind, int n, const Limits& limits = Limits{});

/// Serial reference count.
std::int64_t count_serial(StructureKind kind, int n);
/// OpenMP count; jobs <= 0 uses the runtime default. Equals count_serial.
std::int64_t count_parallel(StructureKind kind, int n, int jobs = 0);

/// Counts for n = 0..max_n. Throws LIMIT_EXCEEDED.
CountTable count_table(StructureKind kind, int max_n, int jobs = 1,
                       const Limits& limits = Limits{});

}  // namespace fishburn
