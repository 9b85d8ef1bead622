#include "bracetree/products.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>

namespace bracetree {
namespace {

// One tree per vertex of `target`: t grafted as a new child of that vertex.
void graft_everywhere(const RootedTree& t, const RootedTree& target, std::vector<RootedTree>& out) {
  auto kids = target.children();
  std::vector<RootedTree> with_t(kids.begin(), kids.end());
  with_t.push_back(t);
  out.push_back(RootedTree::graft(target.root(), target.root_grade(), std::move(with_t)));

  std::vector<RootedTree> below;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    // Equal siblings give equal results; the repeated work keeps the
    // vertex-by-vertex multiplicities.
    below.clear();
    graft_everywhere(t, kids[i], below);
    for (auto& g : below) {
      std::vector<RootedTree> replaced(kids.begin(), kids.end());
      replaced[i] = std::move(g);
      out.push_back(RootedTree::graft(target.root(), target.root_grade(), std::move(replaced)));
    }
  }
}

void shuffle_into(std::span<const PlanarTree> a, std::span<const PlanarTree> b, Forest& prefix, ForestComb& out) {
  if (a.empty() || b.empty()) {
    Forest word = prefix;
    word.insert(word.end(), a.begin(), a.end());
    word.insert(word.end(), b.begin(), b.end());
    out.add_term(std::move(word), 1);
    return;
  }
  prefix.push_back(a.front());
  shuffle_into(a.subspan(1), b, prefix, out);
  prefix.back() = b.front();
  shuffle_into(a, b.subspan(1), prefix, out);
  prefix.pop_back();
}

// Terms of <args; target> with multiplicities, equal trees not yet merged.
using Terms = std::vector<std::pair<PlanarTree, std::uint64_t>>;

Terms brace_terms(std::span<const PlanarTree> args, const PlanarTree& target) {
  if (args.empty()) return {{target, 1}};
  const std::size_t k = args.size();
  auto kids = target.children();

  // partial[p]: child words built so far that have consumed args[0, p).
  using Words = std::vector<std::pair<Forest, std::uint64_t>>;
  std::vector<Words> partial(k + 1);
  partial[0].emplace_back(Forest{}, 1);

  for (const auto& kid : kids) {
    std::vector<Words> next(k + 1);
    std::vector<std::optional<Terms>> blocks((k + 1) * (k + 1));
    const Terms untouched{{kid, 1}};
    for (std::size_t p = 0; p <= k; ++p) {
      if (partial[p].empty()) continue;
      for (std::size_t q = p; q <= k; ++q) {
        for (std::size_t r = q; r <= k; ++r) {
          // args[p, q) become siblings in front of kid, args[q, r) are braced into it.
          const Terms* block = &untouched;
          if (r > q) {
            auto& slot = blocks[q * (k + 1) + r];
            if (!slot) slot = brace_terms(args.subspan(q, r - q), kid);
            block = &*slot;
          }
          for (const auto& [word, c] : partial[p]) {
            for (const auto& [t, ct] : *block) {
              Forest w;
              w.reserve(word.size() + (q - p) + 1 + (k - r));
              w.insert(w.end(), word.begin(), word.end());
              w.insert(w.end(), args.begin() + static_cast<std::ptrdiff_t>(p), args.begin() + static_cast<std::ptrdiff_t>(q));
              w.push_back(t);
              next[r].emplace_back(std::move(w), c * ct);
            }
          }
        }
      }
    }
    partial = std::move(next);
  }

  Terms out;
  for (std::size_t p = 0; p <= k; ++p)
    for (auto& [word, c] : partial[p]) {
      word.insert(word.end(), args.begin() + static_cast<std::ptrdiff_t>(p), args.end());
      out.emplace_back(PlanarTree::graft(target.root(), target.root_grade(), std::move(word)), c);
    }
  return out;
}

void expand_args(std::span<const PlanarComb> args, std::vector<PlanarTree>& chosen, const Rational& coeff,
                 const PlanarTree& target, PlanarComb& out) {
  if (chosen.size() == args.size()) {
    for (auto& [t, n] : brace_terms(chosen, target))
      out.add_term(std::move(t), n == 1 ? coeff : Rational(coeff * mpz_class(n)));
    return;
  }
  for (const auto& [t, c] : args[chosen.size()]) {
    chosen.push_back(t);
    expand_args(args, chosen, Rational(coeff * c), target, out);
    chosen.pop_back();
  }
}

}  // namespace

RootedComb prelie_rooted(const RootedTree& t1, const RootedTree& t2) {
  std::vector<RootedTree> trees;
  graft_everywhere(t1, t2, trees);
  RootedComb out;
  for (auto& t : trees) out.add_term(std::move(t), 1);
  return out;
}

RootedComb prelie_rooted(const RootedComb& x, const RootedComb& y) {
  static const auto extended =
      bilinear_extend<RootedTree, RootedTree>([](const RootedTree& a, const RootedTree& b) { return prelie_rooted(a, b); });
  return extended(x, y);
}

PlanarComb brace(std::span<const PlanarTree> args, const PlanarTree& target) {
  PlanarComb out;
  for (auto& [t, n] : brace_terms(args, target)) out.add_term(std::move(t), Rational(mpz_class(n)));
  assert(out.has_nonnegative_integer_coefficients());
  return out;
}

PlanarComb brace(std::span<const PlanarComb> args, const PlanarComb& target) {
  PlanarComb out;
  std::vector<PlanarTree> chosen;
  chosen.reserve(args.size());
  for (const auto& [t, c] : target) expand_args(args, chosen, c, t, out);
  return out;
}

PlanarComb prelie_planar(const PlanarTree& t1, const PlanarTree& t2) {
  return brace(std::span<const PlanarTree>(&t1, 1), t2);
}

PlanarComb prelie_planar(const PlanarComb& x, const PlanarComb& y) {
  static const auto extended =
      bilinear_extend<PlanarTree, PlanarTree>([](const PlanarTree& a, const PlanarTree& b) { return prelie_planar(a, b); });
  return extended(x, y);
}

PlanarComb star_planar(const PlanarTree& t, const PlanarTree& t2) {
  auto kids = t2.children();
  PlanarComb out;
  for (std::size_t i = 0; i <= kids.size(); ++i) {
    Forest f(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(i));
    f.push_back(t);
    f.insert(f.end(), kids.begin() + static_cast<std::ptrdiff_t>(i), kids.end());
    out.add_term(PlanarTree::graft(t2.root(), t2.root_grade(), std::move(f)), 1);
  }
  return out;
}

PlanarComb star_planar(const PlanarComb& x, const PlanarComb& y) {
  static const auto extended =
      bilinear_extend<PlanarTree, PlanarTree>([](const PlanarTree& a, const PlanarTree& b) { return star_planar(a, b); });
  return extended(x, y);
}

RootedTree star_rooted(const RootedTree& t1, const RootedTree& t2) {
  auto kids = t2.children();
  std::vector<RootedTree> f(kids.begin(), kids.end());
  f.push_back(t1);
  return RootedTree::graft(t2.root(), t2.root_grade(), std::move(f));
}

RootedComb star_rooted(const RootedComb& x, const RootedComb& y) {
  static const auto extended = bilinear_extend<RootedTree, RootedTree>(
      [](const RootedTree& a, const RootedTree& b) { return RootedComb(star_rooted(a, b)); });
  return extended(x, y);
}

ForestComb shuffle(std::span<const PlanarTree> f1, std::span<const PlanarTree> f2) {
  ForestComb out;
  Forest prefix;
  prefix.reserve(f1.size() + f2.size());
  shuffle_into(f1, f2, prefix, out);
  return out;
}

ForestComb shuffle(const ForestComb& x, const ForestComb& y) {
  static const auto extended =
      bilinear_extend<Forest, Forest>([](const Forest& a, const Forest& b) { return shuffle(a, b); });
  return extended(x, y);
}

PlanarComb graft_on_root(const DecorationAlphabet& alphabet, Symbol d, const ForestComb& forests) {
  PlanarComb out;
  for (const auto& [f, c] : forests) out.add_term(b_planar(alphabet, d, f), c);
  return out;
}

}  // namespace bracetree
