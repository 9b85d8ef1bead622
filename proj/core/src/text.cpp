#include "bracetree/text.hpp"

#include <algorithm>
#include <cctype>

#include "bracetree/error.hpp"

namespace bracetree {
namespace detail {
namespace {

bool ident_head(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_tail(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

void Scanner::skip_space() noexcept {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() noexcept {
  skip_space();
  return pos_ >= text_.size();
}

char Scanner::peek() noexcept { return at_end() ? '\0' : text_[pos_]; }

bool Scanner::consume(char c) noexcept {
  if (peek() != c || c == '\0') return false;
  ++pos_;
  return true;
}

void Scanner::expect(char c) {
  if (!consume(c)) {
    if (at_end()) fail(std::string("expected '") + c + "', found end of input");
    fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
  }
}

std::string Scanner::identifier() {
  if (at_end()) fail("expected decoration, found end of input");
  if (!ident_head(text_[pos_])) fail(std::string("expected decoration, found '") + text_[pos_] + "'");
  std::size_t start = pos_;
  while (pos_ < text_.size() && ident_tail(text_[pos_])) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

std::string Scanner::digits() {
  if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
  std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

void Scanner::fail(const std::string& what) const { throw ParseError(what, pos_); }

PlanarTree parse_tree(Scanner& in, const DecorationAlphabet& alphabet) {
  Symbol d = alphabet.at(in.identifier());
  Forest children;
  if (in.consume('[')) {
    do {
      children.push_back(parse_tree(in, alphabet));
    } while (in.consume(','));
    in.expect(']');
  }
  return b_planar(alphabet, d, std::move(children));
}

Forest parse_forest(Scanner& in, const DecorationAlphabet& alphabet) {
  Forest f;
  bool wrapped = in.consume('(');
  if (wrapped && in.consume(')')) return f;
  if (!wrapped && in.at_end()) return f;
  do {
    f.push_back(parse_tree(in, alphabet));
  } while (in.consume(','));
  if (wrapped) in.expect(')');
  return f;
}

}  // namespace detail

namespace {

template <class Kind>
void write_tree(std::string& out, const BasicTree<Kind>& t, const DecorationAlphabet& alphabet) {
  out += alphabet.name(t.root());
  if (t.fertility() == 0) return;
  out += '[';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    write_tree(out, c, alphabet);
  }
  out += ']';
}

void expect_end(detail::Scanner& in) {
  if (!in.at_end()) in.fail("unexpected trailing input");
}

}  // namespace

std::string serialize(const PlanarTree& t, const DecorationAlphabet& alphabet) {
  std::string out;
  write_tree(out, t, alphabet);
  return out;
}

std::string serialize(const RootedTree& t, const DecorationAlphabet& alphabet) {
  std::string out;
  write_tree(out, t, alphabet);
  return out;
}

std::string serialize(std::span<const PlanarTree> forest, const DecorationAlphabet& alphabet) {
  std::string out = "(";
  for (std::size_t i = 0; i < forest.size(); ++i) {
    if (i) out += ',';
    write_tree(out, forest[i], alphabet);
  }
  out += ')';
  return out;
}

PlanarTree parse_planar(std::string_view text, const DecorationAlphabet& alphabet) {
  detail::Scanner in(text);
  auto t = detail::parse_tree(in, alphabet);
  expect_end(in);
  return t;
}

RootedTree parse_rooted(std::string_view text, const DecorationAlphabet& alphabet) {
  return canonicalize(parse_planar(text, alphabet));
}

Forest parse_forest(std::string_view text, const DecorationAlphabet& alphabet) {
  detail::Scanner in(text);
  auto f = detail::parse_forest(in, alphabet);
  expect_end(in);
  return f;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    // Skip numeric literals so coefficients such as 3 or 1/2 are not mistaken
    // for part of an identifier.
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && detail::ident_tail(text[i])) ++i;
      continue;
    }
    if (!detail::ident_head(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && detail::ident_tail(text[i])) ++i;
    std::string name(text.substr(start, i - start));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
  }
  return out;
}

}  // namespace bracetree
