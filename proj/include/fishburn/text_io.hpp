#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fishburn/cover.hpp"
#include "fishburn/matrix.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/sequence.hpp"
#include "fishburn/tree.hpp"

// Canonical text formats. format_* never emits a trailing newline; parse_*
// throws PARSE_ERROR on malformed text and leaves semantic validation to
// the owning module (so a well-formed but invalid matrix raises
// INVALID_MATRIX, not PARSE_ERROR). Multi-line formats also accept ';' as a
// line separator, which is how enumerate writes them on one line.
namespace fishburn::text {

/// "1 6 1 2" or, for a single token of two or more digits 1-9, "1612".
Sequence parse_sequence(std::string_view s);
/// Compact digits when every value is at most 9, space-separated otherwise.
std::string format_sequence(const Sequence& x);

/// tree := "." | "(" tree " " label " " tree ")"
Tree parse_tree(std::string_view s);
std::string format_tree(const Tree& t);

/// "{1,1}{1}{2,2}"
FishburnCover parse_cover(std::string_view s);
std::string format_cover(const FishburnCover& cover);

/// Two lines: top row, bottom row.
BurgeWord parse_burge(std::string_view s);
std::string format_burge(const BurgeWord& w);

/// "k" then k lines, line i holding a(i,1) ... a(i,i). With `transposed`
/// the upper-triangular convention is used: line i holds the entries of
/// column i from the diagonal down, i.e. a(i,i) ... a(k,i).
FishburnMatrix parse_matrix(std::string_view s, bool transposed = false);
std::string format_matrix(const FishburnMatrix& a, bool transposed = false);
/// Human layout: blank upper triangle, '.' for zeros, columns aligned.
std::string pretty_matrix(const FishburnMatrix& a);

/// "k" then one "b level" pair per line, Burge order.
IntervalPoset parse_poset(std::string_view s);
std::string format_poset(const IntervalPoset& q);

/// "n" then lines "u < v".
RelationInput parse_relation(std::string_view s);

/// Any poset text: relation lines "u < v" go through poset_from_relation,
/// anything else is read as canonical "b level" pairs.
IntervalPoset parse_poset_or_relation(std::string_view s);

/// The six interchangeable encodings of a Fishburn structure.
enum class Encoding { Seq, Tree, Cover, Burge, Matrix, Poset };

std::string_view encoding_name(Encoding e) noexcept;
std::optional<Encoding> parse_encoding(std::string_view tag) noexcept;

struct CodecOptions {
  bool transposed = false;  // matrices, both directions
  bool pretty = false;      // matrices, output only
};

/// Parses and validates text in the given encoding and returns its cover,
/// the hub through which every conversion runs.
FishburnCover decode(Encoding e, std::string_view s, const CodecOptions& options = {});
std::string encode(Encoding e, const FishburnCover& cover, const CodecOptions& options = {});

/// Replaces line breaks by "; ".
std::string one_line(std::string_view multiline);

/// One DOT node per tree node captioned by its label (and b-label when
/// with_blabels is set and the tree is Fishburn). Left edges precede right
/// edges.
std::string tree_to_dot(const Tree& t, bool with_blabels = false);
/// Hasse diagram of the poset, nodes captioned "b/level".
std::string poset_to_dot(const IntervalPoset& q);

}  // namespace fishburn::text
