#include "fishburn/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "fishburn/error.hpp"

namespace fishburn::text {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Nonempty trimmed lines; ';' counts as a line break.
std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n' || s[i] == ';') {
      const auto line = trim(s.substr(start, i - start));
      if (!line.empty()) out.push_back(line);
      start = i + 1;
    }
  }
  return out;
}

template <class Int>
Int parse_integer(std::string_view token) {
  Int v{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) parse_error("integer out of range: '" + std::string(token) + "'");
  if (ec != std::errc{} || ptr != last) parse_error("expected an integer, got '" + std::string(token) + "'");
  return v;
}

Label parse_positive(std::string_view token) {
  const auto v = parse_integer<Label>(token);
  if (v < 1) parse_error("values must be positive, got " + std::string(token));
  return v;
}

template <class Range>
std::string join(const Range& values, std::string_view sep) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

// Minimal lexer for the tree and cover grammars.
class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) parse_error(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  Label positive() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
    if (start == pos_) parse_error("expected an integer at offset " + std::to_string(start));
    return parse_positive(s_.substr(start, pos_ - start));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Sequence parse_sequence(std::string_view s) {
  const auto tokens = split_tokens(s);
  std::vector<Label> values;
  if (tokens.size() == 1 && tokens[0].size() >= 2) {
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') parse_error("compact sequences use digits 1-9 only, got '" + std::string(tokens[0]) + "'");
      values.push_back(c - '0');
    }
    return Sequence(std::move(values));
  }
  for (auto t : tokens) values.push_back(parse_positive(t));
  return Sequence(std::move(values));
}

std::string format_sequence(const Sequence& x) {
  const bool compact = std::all_of(x.begin(), x.end(), [](Label v) { return v <= 9; });
  if (!compact) return join(x.entries(), " ");
  std::string out;
  for (Label v : x) out += static_cast<char>('0' + v);
  return out;
}

Tree parse_tree(std::string_view s) {
  Lexer lex(s);
  std::vector<Tree::Node> arena;
  struct Frame {
    int slot;
    bool awaiting_right;
  };
  std::vector<Frame> stack;
  while (true) {
    int value = Tree::kNone;
    const char c = lex.peek();
    if (c == '(') {
      lex.expect('(');
      stack.push_back({static_cast<int>(arena.size()), false});
      arena.emplace_back();
      continue;
    }
    if (c != '.') parse_error("expected '(' or '.'");
    lex.expect('.');
    // Reduce completed subtrees.
    while (true) {
      if (stack.empty()) {
        if (!lex.at_end()) parse_error("trailing characters after tree");
        return Tree::from_arena(std::move(arena), value);
      }
      Frame& top = stack.back();
      if (!top.awaiting_right) {
        arena[top.slot].left = value;
        arena[top.slot].label = lex.positive();
        top.awaiting_right = true;
        break;
      }
      arena[top.slot].right = value;
      lex.expect(')');
      value = top.slot;
      stack.pop_back();
    }
  }
}

std::string format_tree(const Tree& t) {
  std::string out;
  enum class Step { Subtree, Label, Close };
  std::vector<std::pair<Step, int>> stack{{Step::Subtree, t.root()}};
  while (!stack.empty()) {
    const auto [step, slot] = stack.back();
    stack.pop_back();
    switch (step) {
      case Step::Subtree:
        if (slot == Tree::kNone) {
          out += '.';
        } else {
          out += '(';
          stack.push_back({Step::Close, slot});
          stack.push_back({Step::Subtree, t.node(slot).right});
          stack.push_back({Step::Label, slot});
          stack.push_back({Step::Subtree, t.node(slot).left});
        }
        break;
      case Step::Label:
        out += ' ';
        out += std::to_string(t.node(slot).label);
        out += ' ';
        break;
      case Step::Close: out += ')'; break;
    }
  }
  return out;
}

FishburnCover parse_cover(std::string_view s) {
  Lexer lex(s);
  std::vector<std::vector<Label>> blocks;
  while (!lex.at_end()) {
    lex.expect('{');
    std::vector<Label> block;
    if (lex.peek() != '}') {
      block.push_back(lex.positive());
      while (lex.peek() == ',') {
        lex.expect(',');
        block.push_back(lex.positive());
      }
    }
    lex.expect('}');
    blocks.push_back(std::move(block));
  }
  return FishburnCover::from_blocks(std::move(blocks));
}

std::string format_cover(const FishburnCover& cover) {
  std::string out;
  for (const auto& block : cover.blocks()) out += "{" + join(block, ",") + "}";
  return out;
}

BurgeWord parse_burge(std::string_view s) {
  const auto lines = split_lines(s);
  if (lines.empty()) return BurgeWord{};
  if (lines.size() != 2) parse_error("a Burge word has exactly two rows");
  const auto top = split_tokens(lines[0]);
  const auto bottom = split_tokens(lines[1]);
  if (top.size() != bottom.size()) parse_error("Burge rows differ in length");
  BurgeWord w;
  for (std::size_t c = 0; c < top.size(); ++c)
    w.columns.push_back({parse_positive(top[c]), parse_positive(bottom[c])});
  return w;
}

std::string format_burge(const BurgeWord& w) {
  std::vector<Label> top;
  std::vector<Label> bottom;
  for (const auto& c : w.columns) {
    top.push_back(c.top);
    bottom.push_back(c.bottom);
  }
  return join(top, " ") + "\n" + join(bottom, " ");
}

FishburnMatrix parse_matrix(std::string_view s, bool transposed) {
  const auto lines = split_lines(s);
  if (lines.empty()) parse_error("missing matrix dimension");
  const auto head = split_tokens(lines[0]);
  if (head.size() != 1) parse_error("first matrix line must hold the dimension only");
  const int k = parse_integer<int>(head[0]);
  if (k < 0) parse_error("negative matrix dimension");
  if (lines.size() != static_cast<std::size_t>(k) + 1)
    parse_error("expected " + std::to_string(k) + " matrix rows, got " + std::to_string(lines.size() - 1));

  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const auto tokens = split_tokens(lines[i]);
    const int expected = transposed ? k - i + 1 : i;
    if (static_cast<int>(tokens.size()) != expected)
      parse_error("matrix line " + std::to_string(i) + " must hold " + std::to_string(expected) + " entries");
    for (int c = 0; c < expected; ++c) {
      const Entry v = parse_integer<Entry>(tokens[c]);
      if (transposed) {
        rows[static_cast<std::size_t>(i - 1 + c)].push_back(v);  // a(i+c, i)
      } else {
        rows[i - 1].push_back(v);
      }
    }
  }
  return FishburnMatrix::from_lower_rows(rows);
}

std::string format_matrix(const FishburnMatrix& a, bool transposed) {
  const int k = a.dim();
  std::string out = std::to_string(k);
  for (int i = 1; i <= k; ++i) {
    std::vector<Entry> line;
    if (transposed) {
      for (int r = i; r <= k; ++r) line.push_back(a.at(r, i));
    } else {
      for (int j = 1; j <= i; ++j) line.push_back(a.at(i, j));
    }
    out += "\n" + join(line, " ");
  }
  return out;
}

std::string pretty_matrix(const FishburnMatrix& a) {
  std::size_t width = 1;
  for (int i = 1; i <= a.dim(); ++i) {
    for (int j = 1; j <= i; ++j) width = std::max(width, std::to_string(a.at(i, j)).size());
  }
  std::string out;
  for (int i = 1; i <= a.dim(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= i; ++j) {
      const Entry v = a.at(i, j);
      const std::string cell = v == 0 ? "." : std::to_string(v);
      if (j > 1) out += ' ';
      out += std::string(width - cell.size(), ' ') + cell;
    }
  }
  return out;
}

IntervalPoset parse_poset(std::string_view s) {
  const auto lines = split_lines(s);
  if (lines.empty()) parse_error("missing level count");
  const auto head = split_tokens(lines[0]);
  if (head.size() != 1) parse_error("first poset line must hold the level count only");
  const int k = parse_integer<int>(head[0]);
  std::vector<PosetElement> elements;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split_tokens(lines[i]);
    if (tokens.size() != 2) parse_error("poset lines hold two integers 'b level'");
    elements.push_back({parse_positive(tokens[0]), parse_positive(tokens[1])});
  }
  auto q = IntervalPoset::from_elements(std::move(elements));
  if (q.levels() != k)
    throw Error(ErrorCode::InvalidPoset,
                "declared " + std::to_string(k) + " levels, elements span " + std::to_string(q.levels()));
  return q;
}

std::string format_poset(const IntervalPoset& q) {
  std::string out = std::to_string(q.levels());
  for (const auto& e : q.elements()) out += "\n" + std::to_string(e.b) + " " + std::to_string(e.level);
  return out;
}

RelationInput parse_relation(std::string_view s) {
  const auto lines = split_lines(s);
  if (lines.empty()) parse_error("missing element count");
  RelationInput r;
  r.n = parse_integer<int>(lines[0]);
  if (r.n < 0) parse_error("negative element count");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto lt = line.find('<');
    if (lt == std::string_view::npos) parse_error("relation lines read 'u < v'");
    r.less_pairs.emplace_back(parse_integer<int>(trim(line.substr(0, lt))),
                              parse_integer<int>(trim(line.substr(lt + 1))));
  }
  return r;
}

IntervalPoset parse_poset_or_relation(std::string_view s) {
  if (s.find('<') != std::string_view::npos) return poset_from_relation(parse_relation(s));
  return parse_poset(s);
}

namespace {
constexpr std::pair<Encoding, std::string_view> kEncodings[] = {
    {Encoding::Seq, "seq"},     {Encoding::Tree, "tree"},     {Encoding::Cover, "cover"},
    {Encoding::Burge, "burge"}, {Encoding::Matrix, "matrix"}, {Encoding::Poset, "poset"}};
}  // namespace

std::string_view encoding_name(Encoding e) noexcept {
  for (const auto& [enc, name] : kEncodings) {
    if (enc == e) return name;
  }
  return "unknown";
}

std::optional<Encoding> parse_encoding(std::string_view tag) noexcept {
  for (const auto& [enc, name] : kEncodings) {
    if (name == tag) return enc;
  }
  return std::nullopt;
}

FishburnCover decode(Encoding e, std::string_view s, const CodecOptions& options) {
  switch (e) {
    case Encoding::Seq: return modasc_to_cover(parse_sequence(s)).cover;
    case Encoding::Tree: return pairs(parse_tree(s));
    case Encoding::Cover: return parse_cover(s);
    case Encoding::Burge: return from_burge(parse_burge(s));
    case Encoding::Matrix: return matrix_to_cover(parse_matrix(s, options.transposed));
    case Encoding::Poset: return poset_to_cover(parse_poset_or_relation(s));
  }
  throw Error(ErrorCode::Internal, "unknown encoding");
}

std::string encode(Encoding e, const FishburnCover& cover, const CodecOptions& options) {
  switch (e) {
    case Encoding::Seq: return format_sequence(cover_to_modasc(cover));
    case Encoding::Tree: return format_tree(cover_to_tree(cover));
    case Encoding::Cover: return format_cover(cover);
    case Encoding::Burge: return format_burge(to_burge(cover));
    case Encoding::Matrix: {
      const auto a = cover_to_matrix(cover);
      return options.pretty ? pretty_matrix(a) : format_matrix(a, options.transposed);
    }
    case Encoding::Poset: return format_poset(cover_to_poset(cover));
  }
  throw Error(ErrorCode::Internal, "unknown encoding");
}

std::string one_line(std::string_view multiline) {
  std::string out;
  for (char c : multiline) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

std::string tree_to_dot(const Tree& t, bool with_blabels) {
  std::vector<Label> blabels;
  if (with_blabels && is_fishburn_tree(t)) blabels = rpath_decomposition(t).blabels;
  std::string out = "digraph tree {\n  node [shape=circle];\n";
  for (int v = 0; v < t.size(); ++v) {
    out += "  v" + std::to_string(v + 1) + " [label=\"" + std::to_string(t.node(v).label);
    if (!blabels.empty()) out += "\\nb=" + std::to_string(blabels[v]);
    out += "\"];\n";
  }
  // Pre-order so every parent's left edge comes before its right edge.
  std::vector<int> stack;
  if (!t.empty()) stack.push_back(t.root());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto& n = t.node(v);
    if (n.left != Tree::kNone)
      out += "  v" + std::to_string(v + 1) + " -> v" + std::to_string(n.left + 1) + " [tailport=sw];\n";
    if (n.right != Tree::kNone)
      out += "  v" + std::to_string(v + 1) + " -> v" + std::to_string(n.right + 1) + " [tailport=se];\n";
    if (n.right != Tree::kNone) stack.push_back(n.right);
    if (n.left != Tree::kNone) stack.push_back(n.left);
  }
  out += "}";
  return out;
}

std::string poset_to_dot(const IntervalPoset& q) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t u = 0; u < q.size(); ++u) {
    const auto& e = q.elements()[u];
    out += "  e" + std::to_string(u + 1) + " [label=\"" + std::to_string(e.b) + "/" + std::to_string(e.level) +
           "\"];\n";
  }
  for (const auto& [u, v] : cover_relation(q))
    out += "  e" + std::to_string(u) + " -> e" + std::to_string(v) + ";\n";
  out += "}";
  return out;
}

}  // namespace fishburn::text
