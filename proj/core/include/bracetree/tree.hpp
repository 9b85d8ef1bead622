#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "bracetree/alphabet.hpp"

namespace bracetree {

/// Children keep the order they were grafted in.
struct PlanarKind {
  static constexpr bool sorted_children = false;
};

/// Children form a multiset, stored sorted under the canonical tree order.
struct RootedKind {
  static constexpr bool sorted_children = true;
};

/// Immutable decorated rooted tree with shared structure.
///
/// Canonical total order: weight, then root decoration (alphabet order), then
/// the children sequence compared lexicographically. For rooted trees the
/// children are kept sorted under this order, so structural equality of two
/// stored values is equality as unordered trees.
template <class Kind>
class BasicTree {
 public:
  Symbol root() const noexcept { return node_->root; }
  /// Sum of vertex grades; the vertex count when every grade is 1.
  unsigned weight() const noexcept { return node_->weight; }
  unsigned root_grade() const noexcept { return node_->root_grade; }
  std::size_t fertility() const noexcept { return node_->children.size(); }
  std::span<const BasicTree> children() const noexcept { return node_->children; }

  /// B_d(children): a new root of decoration `root` and degree `root_grade`.
  static BasicTree graft(Symbol root, unsigned root_grade, std::vector<BasicTree> children) {
    if constexpr (Kind::sorted_children) std::sort(children.begin(), children.end());
    unsigned w = root_grade;
    for (const auto& c : children) w += c.weight();
    return BasicTree(std::make_shared<const Node>(Node{root, root_grade, w, std::move(children)}));
  }

  friend std::strong_ordering operator<=>(const BasicTree& a, const BasicTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.root() <=> b.root(); c != 0) return c;
    const auto& ac = a.node_->children;
    const auto& bc = b.node_->children;
    return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(), bc.end());
  }

  friend bool operator==(const BasicTree& a, const BasicTree& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    Symbol root;
    unsigned root_grade;
    unsigned weight;
    std::vector<BasicTree> children;
  };

  explicit BasicTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using PlanarTree = BasicTree<PlanarKind>;
using RootedTree = BasicTree<RootedKind>;

/// Ordered word of planar trees.
using Forest = std::vector<PlanarTree>;

/// Throws UnknownDecoration if `d` is not a symbol of `alphabet`.
PlanarTree b_planar(const DecorationAlphabet& alphabet, Symbol d, Forest children);
PlanarTree b_planar(const DecorationAlphabet& alphabet, std::string_view d, Forest children);

RootedTree b_rooted(const DecorationAlphabet& alphabet, Symbol d, std::vector<RootedTree> children);
RootedTree b_rooted(const DecorationAlphabet& alphabet, std::string_view d, std::vector<RootedTree> children);

/// Forgets the planar embedding.
RootedTree canonicalize(const PlanarTree& t);

/// Planar tree whose children appear in canonical order.
PlanarTree embed(const RootedTree& t);

template <class Kind>
unsigned weight(const BasicTree<Kind>& t) noexcept {
  return t.weight();
}

template <class Kind>
std::size_t root_fertility(const BasicTree<Kind>& t) noexcept {
  return t.fertility();
}

unsigned weight(std::span<const PlanarTree> forest) noexcept;

}  // namespace bracetree
