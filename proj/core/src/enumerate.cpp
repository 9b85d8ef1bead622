#include "bracetree/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace bracetree {

TreeTables::TreeTables(DecorationAlphabet alphabet)
    : alphabet_(std::move(alphabet)), planar_(1), forests_(1, std::vector<Forest>{Forest{}}), rooted_(1) {}

const std::vector<PlanarTree>& TreeTables::planar(std::size_t n) {
  grow_planar(n);
  return planar_[n];
}

const std::vector<Forest>& TreeTables::planar_forests(std::size_t n) {
  grow_planar(n);
  return forests_[n];
}

const std::vector<RootedTree>& TreeTables::rooted(std::size_t n) {
  grow_rooted(n);
  return rooted_[n];
}

void TreeTables::grow_planar(std::size_t n) {
  for (std::size_t m = planar_.size(); m <= n; ++m) {
    std::vector<PlanarTree> trees;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      Symbol d = alphabet_.symbol(i);
      unsigned g = alphabet_.grade(d);
      if (g > m) continue;
      for (const auto& f : forests_[m - g]) trees.push_back(PlanarTree::graft(d, g, f));
    }
    std::sort(trees.begin(), trees.end());
    planar_.push_back(std::move(trees));

    // Forests of weight m: first tree of weight k, then any forest of weight m - k.
    std::vector<Forest> forests;
    for (std::size_t k = 1; k <= m; ++k)
      for (const auto& head : planar_[k])
        for (const auto& tail : forests_[m - k]) {
          Forest f;
          f.reserve(tail.size() + 1);
          f.push_back(head);
          f.insert(f.end(), tail.begin(), tail.end());
          forests.push_back(std::move(f));
        }
    forests_.push_back(std::move(forests));
  }
}

void TreeTables::grow_rooted(std::size_t n) {
  for (std::size_t m = rooted_.size(); m <= n; ++m) {
    // Every rooted tree of weight < m, already in canonical order since
    // weight is the leading key.
    std::vector<RootedTree> smaller;
    for (std::size_t k = 1; k < m; ++k) smaller.insert(smaller.end(), rooted_[k].begin(), rooted_[k].end());

    std::vector<RootedTree> trees;
    std::vector<RootedTree> children;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      Symbol d = alphabet_.symbol(i);
      unsigned g = alphabet_.grade(d);
      if (g > m) continue;
      // Non-decreasing child sequences of total weight m - g.
      std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t first) {
        if (remaining == 0) {
          trees.push_back(RootedTree::graft(d, g, children));
          return;
        }
        for (std::size_t j = first; j < smaller.size(); ++j) {
          unsigned w = smaller[j].weight();
          if (w > remaining) break;
          children.push_back(smaller[j]);
          extend(remaining - w, j);
          children.pop_back();
        }
      };
      extend(m - g, 0);
    }
    std::sort(trees.begin(), trees.end());
    rooted_.push_back(std::move(trees));
  }
}

std::vector<PlanarTree> enumerate_planar(std::size_t n, const DecorationAlphabet& alphabet) {
  if (n == 0) return {};
  TreeTables tables(alphabet);
  return tables.planar(n);
}

std::vector<RootedTree> enumerate_rooted(std::size_t n, const DecorationAlphabet& alphabet) {
  if (n == 0) return {};
  TreeTables tables(alphabet);
  return tables.rooted(n);
}

}  // namespace bracetree
