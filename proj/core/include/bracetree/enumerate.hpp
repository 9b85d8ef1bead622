#pragma once

#include <cstddef>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/tree.hpp"

namespace bracetree {

/// Memoized enumeration of all trees of a given weight over one alphabet.
///
/// Planar trees of weight n are B_d(f) for every symbol d and every planar
/// forest f of weight n - grade(d); forests are words of trees. Rooted trees
/// use non-decreasing child sequences instead of words. Every list is sorted
/// under the canonical tree order.
///
/// Lookups fill the cache lazily, so one instance must not be shared between
/// threads without external synchronization; the returned trees themselves
/// are immutable and freely shareable.
class TreeTables {
 public:
  explicit TreeTables(DecorationAlphabet alphabet);

  const DecorationAlphabet& alphabet() const noexcept { return alphabet_; }

  const std::vector<PlanarTree>& planar(std::size_t n);
  const std::vector<Forest>& planar_forests(std::size_t n);
  const std::vector<RootedTree>& rooted(std::size_t n);

 private:
  void grow_planar(std::size_t n);
  void grow_rooted(std::size_t n);

  DecorationAlphabet alphabet_;
  std::vector<std::vector<PlanarTree>> planar_;
  std::vector<std::vector<Forest>> forests_;
  std::vector<std::vector<RootedTree>> rooted_;
};

/// All planar trees of weight n, each exactly once, in canonical order.
/// n = 0 gives an empty list.
std::vector<PlanarTree> enumerate_planar(std::size_t n, const DecorationAlphabet& alphabet);

/// All rooted (non-planar) trees of weight n in canonical order.
std::vector<RootedTree> enumerate_rooted(std::size_t n, const DecorationAlphabet& alphabet);

}  // namespace bracetree
