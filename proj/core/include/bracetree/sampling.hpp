#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/enumerate.hpp"
#include "bracetree/tree.hpp"

namespace bracetree {

/// Seeded uniform sampler of trees of a prescribed weight.
///
/// Planar trees and forests are drawn by weight-stratified recursion over
/// exact counts, so every tree of a given weight is equally likely. Rooted
/// trees are drawn by index from the enumeration table of their weight.
/// The stream depends only on the seed (mt19937_64 output is fixed by the
/// standard and bounded draws use rejection), so runs are reproducible
/// across platforms.
class TreeSampler {
 public:
  TreeSampler(DecorationAlphabet alphabet, std::uint64_t seed);

  const DecorationAlphabet& alphabet() const noexcept { return tables_.alphabet(); }

  /// Number of planar trees / planar forests of weight n. Throws DomainError
  /// past 64-bit range.
  std::uint64_t planar_count(std::size_t n);
  std::uint64_t forest_count(std::size_t n);

  /// Throw DomainError when no tree of that weight exists.
  PlanarTree planar(std::size_t weight);
  Forest forest(std::size_t weight);
  RootedTree rooted(std::size_t weight);

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform among the compositions of `total` into `parts` positive weights
  /// at which planar trees exist. Empty if there is none.
  std::vector<std::size_t> composition(std::size_t total, std::size_t parts);

 private:
  void grow_counts(std::size_t n);

  TreeTables tables_;
  std::mt19937_64 engine_;
  std::vector<std::uint64_t> planar_counts_{0};
  std::vector<std::uint64_t> forest_counts_{1};
};

}  // namespace bracetree
