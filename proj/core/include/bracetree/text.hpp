#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/tree.hpp"

// Text form of trees:
//
//   Tree   := Ident ( "[" Tree ("," Tree)* "]" )?
//   Forest := "(" ( Tree ("," Tree)* )? ")"
//
// Identifiers are decoration symbols; whitespace between tokens is ignored.
// Serialization emits no whitespace, and rooted trees list their children in
// canonical order, so serialize(parse(s)) == s for canonical text.

namespace bracetree {

std::string serialize(const PlanarTree& t, const DecorationAlphabet& alphabet);
std::string serialize(const RootedTree& t, const DecorationAlphabet& alphabet);
std::string serialize(std::span<const PlanarTree> forest, const DecorationAlphabet& alphabet);

/// Throws ParseError (with byte offset) or UnknownDecoration.
PlanarTree parse_planar(std::string_view text, const DecorationAlphabet& alphabet);
RootedTree parse_rooted(std::string_view text, const DecorationAlphabet& alphabet);

/// Comma-separated trees, optionally wrapped in parentheses. Blank text or
/// "()" is the empty forest.
Forest parse_forest(std::string_view text, const DecorationAlphabet& alphabet);

/// Distinct identifiers of `text` in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

namespace detail {

/// Character cursor shared by the tree and combination parsers.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }
  void skip_space() noexcept;
  bool at_end() noexcept;
  /// Next non-space character, or '\0' at end of input.
  char peek() noexcept;
  bool consume(char c) noexcept;
  void expect(char c);
  std::string identifier();
  /// Nonempty run of decimal digits.
  std::string digits();
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PlanarTree parse_tree(Scanner& in, const DecorationAlphabet& alphabet);
Forest parse_forest(Scanner& in, const DecorationAlphabet& alphabet);

}  // namespace detail
}  // namespace bracetree
