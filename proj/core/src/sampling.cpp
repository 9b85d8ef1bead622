#include "bracetree/sampling.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

#include "bracetree/error.hpp"

namespace bracetree {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("tree count exceeds 64 bits; weight too large to sample");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("tree count exceeds 64 bits; weight too large to sample");
  return r;
}

}  // namespace

TreeSampler::TreeSampler(DecorationAlphabet alphabet, std::uint64_t seed)
    : tables_(std::move(alphabet)), engine_(seed) {}

void TreeSampler::grow_counts(std::size_t n) {
  const auto& a = tables_.alphabet();
  for (std::size_t m = planar_counts_.size(); m <= n; ++m) {
    std::uint64_t trees = 0;
    for (unsigned g : a.grades())
      if (g <= m) trees = checked_add(trees, forest_counts_[m - g]);
    planar_counts_.push_back(trees);
    std::uint64_t forests = 0;
    for (std::size_t k = 1; k <= m; ++k) forests = checked_add(forests, checked_mul(planar_counts_[k], forest_counts_[m - k]));
    forest_counts_.push_back(forests);
  }
}

std::uint64_t TreeSampler::planar_count(std::size_t n) {
  grow_counts(n);
  return planar_counts_[n];
}

std::uint64_t TreeSampler::forest_count(std::size_t n) {
  grow_counts(n);
  return forest_counts_[n];
}

std::uint64_t TreeSampler::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

PlanarTree TreeSampler::planar(std::size_t weight) {
  std::uint64_t total = planar_count(weight);
  if (total == 0) throw DomainError("no planar tree of weight " + std::to_string(weight));
  const auto& a = tables_.alphabet();
  std::uint64_t r = below(total);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Symbol d = a.symbol(i);
    unsigned g = a.grade(d);
    if (g > weight) continue;
    std::uint64_t c = forest_counts_[weight - g];
    if (r < c) return PlanarTree::graft(d, g, forest(weight - g));
    r -= c;
  }
  throw std::logic_error("planar sampling fell through");
}

Forest TreeSampler::forest(std::size_t weight) {
  Forest f;
  while (weight > 0) {
    std::uint64_t r = below(forest_count(weight));
    // First tree of weight k, chosen with probability P(k) F(weight - k) / F(weight).
    std::size_t k = 1;
    for (;; ++k) {
      std::uint64_t c = checked_mul(planar_counts_[k], forest_counts_[weight - k]);
      if (r < c) break;
      r -= c;
    }
    f.push_back(planar(k));
    weight -= k;
  }
  return f;
}

RootedTree TreeSampler::rooted(std::size_t weight) {
  const auto& trees = tables_.rooted(weight);
  if (trees.empty()) throw DomainError("no rooted tree of weight " + std::to_string(weight));
  return trees[below(trees.size())];
}

std::vector<std::size_t> TreeSampler::composition(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (current.size() + 1 == parts) {
      if (planar_count(remaining) > 0) {
        current.push_back(remaining);
        all.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (std::size_t w = 1; w + (parts - current.size() - 1) <= remaining; ++w) {
      if (planar_count(w) == 0) continue;
      current.push_back(w);
      extend(remaining - w);
      current.pop_back();
    }
  };
  if (parts == 0 || total < parts) return {};
  extend(total);
  if (all.empty()) return {};
  return all[below(all.size())];
}

}  // namespace bracetree
