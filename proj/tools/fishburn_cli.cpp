#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fishburn/fishburn.hpp"

namespace fb = fishburn;

namespace {

// Stable exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kParse = 2;
constexpr int kValidation = 3;
constexpr int kLimits = 4;

int exit_code(fb::ErrorCode code) {
  switch (code) {
    case fb::ErrorCode::Parse: return kParse;
    case fb::ErrorCode::LimitExceeded:
    case fb::ErrorCode::Overflow: return kLimits;
    case fb::ErrorCode::Internal: return kCheckFailed;
    default: return kValidation;
  }
}

const std::vector<std::string> kTags{"seq", "tree", "cover", "burge", "matrix", "poset"};

fb::text::Encoding encoding(const std::string& tag) { return *fb::text::parse_encoding(tag); }

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& positional, const std::string& file) {
  if (!positional.empty()) return positional;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw fb::Error(fb::ErrorCode::Parse, "cannot read " + file);
    return read_stream(in);
  }
  return read_stream(std::cin);
}

// Ends every payload with exactly one newline and no trailing blanks.
void emit(const std::string& payload) {
  std::istringstream lines(payload);
  std::string line;
  std::string out;
  bool any = false;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
    out += line + '\n';
    any = true;
  }
  if (!any) out = "\n";
  std::cout << out;
}

// Two operands for `sum` from stdin: blank-line separated chunks, or two
// lines for sequences.
std::pair<std::string, std::string> split_operands(const std::string& s, const std::string& kind) {
  std::vector<std::string> chunks{""};
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!chunks.back().empty()) chunks.emplace_back();
    } else {
      chunks.back() += line + '\n';
    }
  }
  if (chunks.back().empty()) chunks.pop_back();
  if (chunks.size() == 1 && kind == "seq") {
    std::istringstream rows(chunks[0]);
    chunks.clear();
    while (std::getline(rows, line)) chunks.push_back(line);
  }
  if (chunks.size() != 2) throw fb::Error(fb::ErrorCode::Parse, "sum needs exactly two operands");
  return {chunks[0], chunks[1]};
}

std::string join_counts(const fb::CountTable& t, bool table) {
  std::string out;
  for (const auto& r : t.rows) {
    if (table) {
      out += std::to_string(r.n) + " " + std::to_string(r.count) + "\n";
    } else {
      out += (out.empty() ? "" : " ") + std::to_string(r.count);
    }
  }
  return out;
}

fb::StructureKind require_kind(const std::string& name) {
  if (auto k = fb::parse_kind(name)) return *k;
  throw fb::Error(fb::ErrorCode::Parse, "unknown structure kind '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fishburn structures: conversion, flip and sum, enumeration, counting and verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string input;
  std::string in_file;
  fb::text::CodecOptions format;

  auto* convert = app.add_subcommand("convert", "Convert between Fishburn structures");
  std::string from_tag;
  std::string to_tag;
  convert->add_option("--from", from_tag, "Input kind")->required()->check(CLI::IsMember(kTags));
  convert->add_option("--to", to_tag, "Output kind")->required()->check(CLI::IsMember(kTags));
  convert->add_option("input", input, "Input text (default: stdin)");
  convert->add_option("--in", in_file, "Read the input from a file");
  convert->add_flag("--transpose", format.transposed, "Matrices in the upper-triangular convention");
  convert->add_flag("--pretty", format.pretty, "Human matrix layout (output only)");

  auto* flip = app.add_subcommand("flip", "Flip a structure (modified ascent sequence by default)");
  std::string kind_tag = "seq";
  flip->add_option("input", input, "Input text (default: stdin)");
  flip->add_option("--in", in_file, "Read the input from a file");
  flip->add_option("--kind", kind_tag, "Input and output kind")->check(CLI::IsMember(kTags));
  flip->add_flag("--transpose", format.transposed, "Matrices in the upper-triangular convention");

  auto* sum = app.add_subcommand("sum", "Sum of two structures");
  std::vector<std::string> operands;
  sum->add_option("operands", operands, "Two inputs (default: stdin, blank-line separated)")->expected(0, 2);
  sum->add_option("--kind", kind_tag, "Input and output kind")->check(CLI::IsMember(kTags));
  sum->add_flag("--transpose", format.transposed, "Matrices in the upper-triangular convention");

  auto* count = app.add_subcommand("count", "Count structures of size 0..N");
  std::string count_kind;
  int max_n = 0;
  int jobs = 1;
  bool table = false;
  count->add_option("kind", count_kind, "cayley, modasc, ascseq, fishburn_tree, cover, matrix, poset, fishburn-gf, fubini")
      ->required();
  count->add_option("--max", max_n, "Largest size")->required();
  count->add_option("--jobs", jobs, "Threads for the count (0: runtime default)");
  count->add_flag("--table", table, "One 'n count' row per size");

  auto* enumerate = app.add_subcommand("enumerate", "List every structure of size N, one per line");
  std::string enum_kind;
  int size = 0;
  enumerate->add_option("kind", enum_kind, "Structure kind")->required();
  enumerate->add_option("n", size, "Size")->required();

  auto* verify = app.add_subcommand("verify", "Run the exhaustive invariant suite");
  fb::VerifyOptions options;
  options.n_max = 6;
  std::string report_format = "text";
  verify->add_option("--max", options.n_max, "Largest size");
  verify->add_option("--pair-total", options.pair_total, "Largest |x|+|y| for sum laws (default: --max)");
  verify->add_option("--jobs", options.jobs, "Threads for independent checks (0: runtime default)");
  verify->add_option("--format", report_format, "text or records")->check(CLI::IsMember({"text", "records"}));

  auto* render = app.add_subcommand("render", "Emit Graphviz DOT for a tree or poset");
  std::string render_kind = "tree";
  bool blabels = false;
  render->add_option("input", input, "Input text (default: stdin)");
  render->add_option("--in", in_file, "Read the input from a file");
  render->add_option("--kind", render_kind, "tree or poset")->check(CLI::IsMember({"tree", "poset"}));
  render->add_flag("--blabels", blabels, "Caption Fishburn tree nodes with b-labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const auto limits = fb::Limits::from_env();
    if (*convert) {
      emit(fb::text::encode(encoding(to_tag), fb::text::decode(encoding(from_tag), read_input(input, in_file), format),
                            format));
    } else if (*flip) {
      const auto e = encoding(kind_tag);
      emit(fb::text::encode(e, fb::cover_flip(fb::text::decode(e, read_input(input, in_file), format)), format));
    } else if (*sum) {
      std::pair<std::string, std::string> xy;
      if (operands.size() == 2) {
        xy = {operands[0], operands[1]};
      } else if (operands.empty()) {
        xy = split_operands(read_stream(std::cin), kind_tag);
      } else {
        throw fb::Error(fb::ErrorCode::Parse, "sum needs exactly two operands");
      }
      const auto e = encoding(kind_tag);
      emit(fb::text::encode(e, fb::cover_sum(fb::text::decode(e, xy.first, format), fb::text::decode(e, xy.second, format)),
                            format));
    } else if (*count) {
      fb::CountTable t;
      if (count_kind == "fishburn-gf") {
        t = fb::fishburn_numbers(max_n);
      } else if (count_kind == "fubini") {
        t = fb::fubini_numbers(max_n);
      } else {
        t = fb::count_table(require_kind(count_kind), max_n, jobs, limits);
      }
      emit(join_counts(t, table));
    } else if (*enumerate) {
      std::string out;
      for (const auto& line : fb::enumerate(require_kind(enum_kind), size, limits)) out += line + '\n';
      std::cout << out;
    } else if (*verify) {
      const auto report = fb::verify(options, limits);
      emit(report_format == "records" ? report.records() : report.text());
      return report.all_passed() ? kOk : kCheckFailed;
    } else if (*render) {
      const auto text = read_input(input, in_file);
      emit(render_kind == "tree" ? fb::text::tree_to_dot(fb::text::parse_tree(text), blabels)
                                 : fb::text::poset_to_dot(fb::text::parse_poset_or_relation(text)));
    }
  } catch (const fb::Error& e) {
    std::cerr << "fishburn: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "fishburn: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}
