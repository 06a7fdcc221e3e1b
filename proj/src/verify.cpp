#include "fishburn/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fishburn/cover.hpp"
#include "fishburn/error.hpp"
#include "fishburn/matrix.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/text_io.hpp"
#include "fishburn/transforms.hpp"

namespace fishburn {

namespace {

using Outcome = std::optional<std::string>;  // counterexample on failure

std::string seq(const Sequence& x) { return text::format_sequence(x); }
std::string mat(const FishburnMatrix& a) { return text::one_line(text::format_matrix(a)); }

Outcome mismatch(std::int64_t got, std::int64_t expected) {
  if (got == expected) return std::nullopt;
  return "got " + std::to_string(got) + ", expected " + std::to_string(expected);
}

// Read-only inputs shared by all checks.
struct Inputs {
  std::vector<std::int64_t> fishburn;
  std::vector<std::int64_t> fubini;
  std::vector<std::vector<Sequence>> modasc;
  std::vector<std::vector<FishburnMatrix>> matrices;
};

struct Check {
  std::string name;
  int n;
  std::function<Outcome()> run;
};

Outcome check_count_cayley(const Inputs& in, int n) {
  std::int64_t count = 0;
  Outcome bad;
  for_each_cayley(n, [&](const Sequence& x) {
    ++count;
    if (!bad && !is_cayley(x)) bad = "generated non-Cayley word " + seq(x);
  });
  return bad ? bad : mismatch(count, in.fubini[n]);
}

Outcome check_count_ascseq(const Inputs& in, int n) {
  std::int64_t count = 0;
  Outcome bad;
  for_each_ascent_sequence(n, [&](const Sequence& x) {
    ++count;
    if (!bad && !is_ascent_sequence(x)) bad = "generated non-ascent sequence " + seq(x);
  });
  return bad ? bad : mismatch(count, in.fishburn[n]);
}

// Builds each matrix's derived structure, requiring validity and distinctness.
Outcome check_count_derived(const Inputs& in, int n, StructureKind kind) {
  std::set<std::string> seen;
  for (const auto& a : in.matrices[n]) {
    const auto cover = matrix_to_cover(a);
    std::string key;
    if (kind == StructureKind::Cover) {
      key = text::format_cover(cover);
    } else if (kind == StructureKind::FishburnTree) {
      const auto t = cover_to_tree(cover);
      if (!is_fishburn_tree(t)) return "not a Fishburn tree: " + text::format_tree(t);
      if (t.size() != n) return "tree of wrong size from " + mat(a);
      key = text::format_tree(t);
    } else {
      const auto q = cover_to_poset(cover);
      if (!satisfies_order_axioms(q)) return "not a (2+2)-free order: " + text::one_line(text::format_poset(q));
      key = text::one_line(text::format_poset(q));
    }
    if (!seen.insert(key).second) return "duplicate " + key;
  }
  return mismatch(static_cast<std::int64_t>(seen.size()), in.fishburn[n]);
}

Outcome check_alpha_lambda(int n) {
  Outcome bad;
  for_each_endofunction(n, [&](const Sequence& x) {
    if (!bad && in_order(seq_to_tree(x)) != x) bad = seq(x);
  });
  return bad;
}

Outcome check_lambda_alpha(int n) {
  Outcome bad;
  std::int64_t count = 0;
  for_each_endotree(n, [&](const Tree& t) {
    ++count;
    if (bad) return;
    if (!classify_tree(t).endotree) {
      bad = "generated non-endotree " + text::format_tree(t);
    } else if (seq_to_tree(in_order(t)) != t) {
      bad = text::format_tree(t);
    }
  });
  if (bad) return bad;
  std::int64_t expected = 1;
  for (int i = 0; i < n; ++i) expected *= n;
  return mismatch(count, expected);
}

Outcome check_fishburn_iff_modasc(int n) {
  Outcome bad;
  for_each_cayley(n, [&](const Sequence& x) {
    if (!bad && is_fishburn_tree(seq_to_tree(x)) != is_modified_ascent_sequence(x)) bad = seq(x);
  });
  return bad;
}

Outcome check_cover_tree(const Inputs& in, int n) {
  for (const auto& x : in.modasc[n]) {
    const auto t = seq_to_tree(x);
    if (cover_to_tree(pairs(t)) != t) return "tree of " + seq(x);
  }
  for (const auto& a : in.matrices[n]) {
    const auto c = matrix_to_cover(a);
    if (pairs(cover_to_tree(c)) != c) return text::format_cover(c);
  }
  return std::nullopt;
}

Outcome check_matrix_cover(const Inputs& in, int n) {
  for (const auto& a : in.matrices[n]) {
    const auto c = matrix_to_cover(a);
    if (cover_to_matrix(c) != a) return mat(a);
  }
  for (const auto& x : in.modasc[n]) {
    const auto c = modasc_to_cover(x).cover;
    if (matrix_to_cover(cover_to_matrix(c)) != c) return text::format_cover(c);
  }
  return std::nullopt;
}

Outcome check_burge(const Inputs& in, int n) {
  for (const auto& a : in.matrices[n]) {
    const auto c = matrix_to_cover(a);
    if (from_burge(to_burge(c)) != c) return text::format_cover(c);
  }
  return std::nullopt;
}

Outcome check_poset_tree(const Inputs& in, int n) {
  for (const auto& x : in.modasc[n]) {
    const auto t = seq_to_tree(x);
    if (poset_to_tree(tree_to_poset(t)) != t) return "tree of " + seq(x);
  }
  for (const auto& a : in.matrices[n]) {
    const auto q = cover_to_poset(matrix_to_cover(a));
    if (tree_to_poset(poset_to_tree(q)) != q) return text::one_line(text::format_poset(q));
    if (poset_from_relation(relation_of(q)) != q) return "relation of " + text::one_line(text::format_poset(q));
  }
  return std::nullopt;
}

Outcome check_cover_modasc(const Inputs& in, int n) {
  for (const auto& a : in.matrices[n]) {
    const auto c = matrix_to_cover(a);
    if (cover_to_modasc(c) != in_order(cover_to_tree(c))) return text::format_cover(c);
  }
  for (const auto& x : in.modasc[n]) {
    const auto t = seq_to_tree(x);
    const auto mc = modasc_to_cover(x);
    if (mc.cover != pairs(t) || mc.blabels != rpath_decomposition(t).blabels) return seq(x);
  }
  return std::nullopt;
}

Outcome check_flip_involution(const Inputs& in, int n) {
  for (const auto& x : in.modasc[n]) {
    const auto y = flip_modasc(x);
    if (y.size() != x.size() || !is_modified_ascent_sequence(y) || flip_modasc(y) != x) return seq(x);
  }
  return std::nullopt;
}

Outcome check_flip_diagram(const Inputs& in, int n) {
  for (const auto& x : in.modasc[n]) {
    const auto a = cover_to_matrix(modasc_to_cover(x).cover);
    if (cover_to_matrix(modasc_to_cover(flip_modasc(x)).cover) != flip_matrix(a)) return seq(x);
  }
  return std::nullopt;
}

Outcome check_dual_flip(const Inputs& in, int n) {
  for (const auto& x : in.modasc[n]) {
    if (dual(tree_to_poset(seq_to_tree(x))) != tree_to_poset(seq_to_tree(flip_modasc(x)))) return seq(x);
  }
  return std::nullopt;
}

// All pairs (x, y) with |x| + |y| = total.
Outcome check_sum(const Inputs& in, int total) {
  for (int a = 0; a <= total; ++a) {
    for (const auto& x : in.modasc[a]) {
      const auto ax = cover_to_matrix(modasc_to_cover(x).cover);
      for (const auto& y : in.modasc[total - a]) {
        const auto s = sum_modasc(x, y);
        const std::string where = seq(x) + " + " + seq(y);
        if (static_cast<int>(s.size()) != total) return "size not additive: " + where;
        if (!is_modified_ascent_sequence(s)) return "not modasc: " + where;
        const auto ay = cover_to_matrix(modasc_to_cover(y).cover);
        if (cover_to_matrix(modasc_to_cover(s).cover) != sum_matrices(ax, ay)) return where;
      }
    }
  }
  return std::nullopt;
}

std::string quadruple(const Quadruple& q) {
  const auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("tree=") + b(q.tree) + " seq=" + b(q.sequence) + " matrix=" + b(q.matrix) + " poset=" + b(q.poset);
}

Outcome check_classify(const Inputs& in, int n, bool primitive) {
  for (const auto& x : in.modasc[n]) {
    const auto c = classify_all(x);
    const auto& q = primitive ? c.primitive : c.self_modified;
    if (!q.all_equal()) return seq(x) + " (" + quadruple(q) + ")";
  }
  return std::nullopt;
}

}  // namespace

bool VerifyReport::all_passed() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (n=" << c.n << ")";
    if (!c.passed) out << ": " << c.counterexample;
    out << '\n';
  }
  out << checks.size() - failures() << "/" << checks.size() << " checks passed";
  return out.str();
}

std::string VerifyReport::records() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i > 0) out << '\n';
    out << c.name << ' ' << c.n << ' ' << (c.passed ? "pass" : "fail");
    if (!c.passed) out << ' ' << c.counterexample;
  }
  return out.str();
}

VerifyReport verify(const VerifyOptions& options, const Limits& limits) {
  const int n_max = options.n_max;
  const int pair_total = options.pair_total < 0 ? n_max : options.pair_total;
  for (auto kind : {StructureKind::Cayley, StructureKind::Matrix}) limits.check(kind, n_max);
  limits.check(StructureKind::Modasc, pair_total);

  Inputs in;
  const int top = std::max(n_max, pair_total);
  in.fishburn = fishburn_numbers(top).counts();
  in.fubini = fubini_numbers(top).counts();
  in.modasc.resize(static_cast<std::size_t>(top) + 1);
  in.matrices.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= top; ++n) for_each_modasc(n, [&](const Sequence& x) { in.modasc[n].push_back(x); });
  for (int n = 0; n <= n_max; ++n)
    for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) { in.matrices[n].push_back(a); });

  std::vector<Check> checks;
  const Inputs& shared = in;
  for (int n = 0; n <= n_max; ++n) {
    const auto add = [&](std::string name, std::function<Outcome()> run) {
      checks.push_back({std::move(name), n, std::move(run)});
    };
    add("count-fishburn-oracle", [&shared, n] {
      return n <= 5 ? mismatch(shared.fishburn[n], std::vector<std::int64_t>{1, 1, 2, 5, 15, 53}[n]) : Outcome{};
    });
    add("count-cayley", [&shared, n] { return check_count_cayley(shared, n); });
    add("count-modasc", [&shared, n] {
      return mismatch(static_cast<std::int64_t>(shared.modasc[n].size()), shared.fishburn[n]);
    });
    add("count-ascseq", [&shared, n] { return check_count_ascseq(shared, n); });
    add("count-matrix", [&shared, n] {
      return mismatch(static_cast<std::int64_t>(shared.matrices[n].size()), shared.fishburn[n]);
    });
    add("count-cover", [&shared, n] { return check_count_derived(shared, n, StructureKind::Cover); });
    add("count-tree", [&shared, n] { return check_count_derived(shared, n, StructureKind::FishburnTree); });
    add("count-poset", [&shared, n] { return check_count_derived(shared, n, StructureKind::Poset); });
    add("alpha-lambda", [n] { return check_alpha_lambda(n); });
    add("lambda-alpha", [n] { return check_lambda_alpha(n); });
    add("fishburn-iff-modasc", [n] { return check_fishburn_iff_modasc(n); });
    add("cover-tree-roundtrip", [&shared, n] { return check_cover_tree(shared, n); });
    add("matrix-cover-roundtrip", [&shared, n] { return check_matrix_cover(shared, n); });
    add("burge-roundtrip", [&shared, n] { return check_burge(shared, n); });
    add("poset-tree-roundtrip", [&shared, n] { return check_poset_tree(shared, n); });
    add("cover-modasc-agreement", [&shared, n] { return check_cover_modasc(shared, n); });
    add("flip-involution", [&shared, n] { return check_flip_involution(shared, n); });
    add("flip-matrix-diagram", [&shared, n] { return check_flip_diagram(shared, n); });
    add("flip-dual-poset", [&shared, n] { return check_dual_flip(shared, n); });
    add("classify-primitive", [&shared, n] { return check_classify(shared, n, true); });
    add("classify-self-modified", [&shared, n] { return check_classify(shared, n, false); });
  }
  for (int total = 0; total <= pair_total; ++total)
    checks.push_back({"sum-matrix-diagram", total, [&shared, total] { return check_sum(shared, total); }});

  VerifyReport report;
  report.checks.resize(checks.size());
  const auto count = static_cast<std::ptrdiff_t>(checks.size());
#ifdef _OPENMP
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#else
  const int threads = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads != 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    CheckResult r{checks[i].name, checks[i].n, true, {}};
    try {
      if (auto bad = checks[i].run()) {
        r.passed = false;
        r.counterexample = *bad;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    report.checks[i] = std::move(r);
  }
  return report;
}

}  // namespace fishburn
