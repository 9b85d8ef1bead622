#include "bracetree/tree.hpp"

#include "bracetree/error.hpp"

namespace bracetree {
namespace {

void check_symbol(const DecorationAlphabet& alphabet, Symbol d) {
  if (d.index >= alphabet.size()) throw UnknownDecoration("#" + std::to_string(d.index));
}

}  // namespace

PlanarTree b_planar(const DecorationAlphabet& alphabet, Symbol d, Forest children) {
  check_symbol(alphabet, d);
  return PlanarTree::graft(d, alphabet.grade(d), std::move(children));
}

PlanarTree b_planar(const DecorationAlphabet& alphabet, std::string_view d, Forest children) {
  return b_planar(alphabet, alphabet.at(d), std::move(children));
}

RootedTree b_rooted(const DecorationAlphabet& alphabet, Symbol d, std::vector<RootedTree> children) {
  check_symbol(alphabet, d);
  return RootedTree::graft(d, alphabet.grade(d), std::move(children));
}

RootedTree b_rooted(const DecorationAlphabet& alphabet, std::string_view d, std::vector<RootedTree> children) {
  return b_rooted(alphabet, alphabet.at(d), std::move(children));
}

RootedTree canonicalize(const PlanarTree& t) {
  std::vector<RootedTree> children;
  children.reserve(t.fertility());
  for (const auto& c : t.children()) children.push_back(canonicalize(c));
  return RootedTree::graft(t.root(), t.root_grade(), std::move(children));
}

PlanarTree embed(const RootedTree& t) {
  Forest children;
  children.reserve(t.fertility());
  for (const auto& c : t.children()) children.push_back(embed(c));
  return PlanarTree::graft(t.root(), t.root_grade(), std::move(children));
}

unsigned weight(std::span<const PlanarTree> forest) noexcept {
  unsigned w = 0;
  for (const auto& t : forest) w += t.weight();
  return w;
}

}  // namespace bracetree
