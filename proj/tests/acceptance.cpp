// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fishburn/fishburn.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fishburn;

namespace {

struct Criterion {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string matrix_text(const std::vector<std::vector<long long>>& rows) {
  std::string s = std::to_string(rows.size());
  for (const auto& r : rows) {
    s += "\n";
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? " " : "") + std::to_string(r[j]);
  }
  return s;
}

std::string matrix_of(const std::string& word) {
  return text::encode(text::Encoding::Matrix, text::decode(text::Encoding::Seq, word));
}

void golden_examples(Criterion& c) {
  using text::Encoding;
  // Running example quadruple, every direction.
  const std::vector<std::pair<Encoding, std::string>> running{
      {Encoding::Seq, golden::kRunningWord},
      {Encoding::Tree, text::format_tree(golden::running_tree_from_drawing())},
      {Encoding::Cover, golden::kRunningCover},
      {Encoding::Matrix, matrix_text(golden::kRunningMatrix)}};
  for (const auto& [from, in] : running) {
    for (const auto& [to, expected] : running) {
      c.expect(text::encode(to, text::decode(from, in)) == expected,
               std::string("running example ") + std::string(text::encoding_name(from)) + " -> " +
                   std::string(text::encoding_name(to)));
    }
  }

  // Cover example: cover -> tree -> word.
  const auto p5 = text::parse_cover(golden::kCoverExampleCover);
  const auto t5 = cover_to_tree(p5);
  c.expect(text::format_sequence(in_order(t5)) == golden::kCoverExampleWord, "cover example tree word");
  c.expect(text::format_sequence(cover_to_modasc(p5)) == golden::kCoverExampleWord, "cover example word assembly");
  c.expect(rpath_decomposition(t5).blabels == golden::kCoverExampleBLabels, "cover example b-labels");

  // Flip example.
  const auto x = text::parse_sequence(golden::kFlipX);
  c.expect(text::format_sequence(flip_modasc(x)) == golden::kFlipResult, "flip word");
  c.expect(matrix_of(golden::kFlipX) == matrix_text(golden::kMatrixX), "matrix of x");
  c.expect(matrix_of(golden::kFlipResult) == matrix_text(golden::kMatrixFlipX), "matrix of flip(x)");
  c.expect(text::format_matrix(flip_matrix(text::parse_matrix(matrix_text(golden::kMatrixX)))) ==
               matrix_text(golden::kMatrixFlipX),
           "matrix flip");

  // Sum example.
  const auto y = text::parse_sequence(golden::kSumY);
  c.expect(text::format_sequence(sum_modasc(x, y)) == golden::kSumResult, "sum word");
  c.expect(matrix_of(golden::kSumY) == matrix_text(golden::kMatrixY), "matrix of x'");
  c.expect(matrix_of(golden::kSumResult) == matrix_text(golden::kMatrixSum), "matrix of x + x'");

  // Poset example: tree <-> canonical poset labels.
  std::vector<PosetElement> drawn;
  for (auto [b, l] : golden::kPosetExampleElements) drawn.push_back({b, l});
  const auto q = IntervalPoset::from_elements(drawn);
  const auto t7 = text::parse_tree(golden::kPosetExampleTree);
  c.expect(tree_to_poset(t7) == q, "poset example tree -> poset");
  c.expect(poset_to_tree(q) == t7, "poset example poset -> tree");
  RelationInput hasse{static_cast<int>(drawn.size()), {}};
  for (auto [upper, lower] : golden::kPosetExampleHasse) hasse.less_pairs.emplace_back(lower, upper);
  c.expect(poset_from_relation(hasse) == q, "poset example Hasse diagram -> canonical labels");
}

void counting(Criterion& c) {
  const auto f = fishburn_numbers(8).counts();
  const std::vector<std::int64_t> known{1, 1, 2, 5, 15, 53};
  for (int n = 0; n <= 5; ++n) c.expect(f[n] == known[n], "known F_" + std::to_string(n));
  for (int n : {6, 7})
    c.expect(f[n] == oracle::count_if(n, oracle::ascent), "F_" + std::to_string(n) + " vs brute-force ascent sequences");
  for (int n = 0; n <= 7; ++n) {
    for (auto kind : {StructureKind::Modasc, StructureKind::Ascseq, StructureKind::FishburnTree, StructureKind::Matrix,
                      StructureKind::Poset})
      c.expect(count_serial(kind, n) == f[n], std::string(kind_name(kind)) + " at n = " + std::to_string(n));
  }
  const auto a = fubini_numbers(8).counts();
  c.expect(a[1] == 1 && a[2] == 3 && a[3] == 13, "known Fubini numbers");
  for (int n = 0; n <= 8; ++n)
    c.expect(count_serial(StructureKind::Cayley, n) == a[n], "Cayley at n = " + std::to_string(n));
}

void from_report(Criterion& c, const VerifyReport& r, const std::set<std::string>& names, int max_n) {
  std::set<std::string> seen;
  for (const auto& check : r.checks) {
    if (!names.count(check.name) || check.n > max_n) continue;
    seen.insert(check.name);
    c.expect(check.passed, check.name + " n=" + std::to_string(check.n) + ": " + check.counterexample);
  }
  for (const auto& name : names) c.expect(seen.count(name) > 0, "missing check " + name);
}

template <class F>
std::string error_text(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

void negative_validation(Criterion& c) {
  const auto left = error_text([] { pairs(text::parse_tree(golden::kNonFishburnLeft)); });
  c.expect(left.find("NOT_FISHBURN") == 0 && left.find("not an endotree") != std::string::npos &&
               left.find("strictly decrease to the left") != std::string::npos,
           "non-Fishburn example, left: " + left);
  c.expect(!classify_tree(text::parse_tree(golden::kNonFishburnLeft)).endotree,
           "non-Fishburn example, left classified as endotree");

  const auto right_tree = text::parse_tree(golden::kNonFishburnRight);
  const auto right = error_text([&] { pairs(right_tree); });
  c.expect(classify_tree(right_tree).endotree && classify_tree(right_tree).regular,
           "non-Fishburn example, right is a regular endotree");
  c.expect(right.find("NOT_FISHBURN") == 0 && right.find("treetops != unseen") != std::string::npos,
           "non-Fishburn example, right: " + right);

  const auto two_two = error_text([] { poset_from_relation({4, {{1, 2}, {3, 4}}}); });
  c.expect(two_two.find("NOT_TWO_PLUS_TWO_FREE") == 0 && two_two.find("2+2") != std::string::npos,
           "2+2 relation: " + two_two);
}

}  // namespace

int main() {
  struct Row {
    std::string title;
    double budget_s;
    std::function<void(Criterion&)> run;
  };

  VerifyReport report;
  bool have_report = false;
  const auto report_for = [&]() -> const VerifyReport& {
    if (!have_report) {
      report = verify({7, 9, 0});
      have_report = true;
    }
    return report;
  };

  const std::vector<Row> rows{
      {"golden worked examples", 1.0, golden_examples},
      {"counting against both oracles", 300.0, counting},
      {"roundtrip suite", 300.0,
       [&](Criterion& c) {
         from_report(c, report_for(),
                     {"alpha-lambda", "lambda-alpha", "cover-tree-roundtrip", "matrix-cover-roundtrip",
                      "cover-modasc-agreement", "poset-tree-roundtrip"},
                     7);
       }},
      {"operation laws", 300.0,
       [&](Criterion& c) {
         from_report(c, report_for(),
                     {"flip-involution", "flip-matrix-diagram", "flip-dual-poset", "sum-matrix-diagram"}, 9);
       }},
      {"classification quadruples", 300.0,
       [&](Criterion& c) { from_report(c, report_for(), {"classify-primitive", "classify-self-modified"}, 7); }},
      {"negative validation", 1.0, negative_validation},
  };

  int failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      rows[i].run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > rows[i].budget_s) c.failures.push_back("over the time budget");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %zu: %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, rows[i].title.c_str(), s);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
