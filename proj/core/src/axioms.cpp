#include "bracetree/axioms.hpp"

#include <algorithm>
#include <functional>

#include "bracetree/enumerate.hpp"
#include "bracetree/sampling.hpp"
#include "bracetree/text.hpp"

namespace bracetree {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++result_.instances;
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxCounterexamples) result_.counterexamples.push_back(describe());
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string describe(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string out;
  for (const auto& [label, text] : parts) {
    if (!out.empty()) out += ", ";
    out += label;
    out += '=';
    out += text;
  }
  return out;
}

std::string list_text(std::span<const PlanarTree> ts, const DecorationAlphabet& a) { return serialize(ts, a); }

// Seeds differ per configuration so that adding trials to one configuration
// does not perturb the instances drawn for another.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) { return seed * 0x9E3779B97F4A7C15ULL + tag; }

template <class Comb, class Product>
Comb associator(const Comb& x, const Comb& y, const Comb& z, Product&& prod) {
  return prod(prod(x, y), z) - prod(x, prod(y, z));
}

// ---------------------------------------------------------------- pre-Lie

std::vector<CheckResult> prelie_suite(const DecorationAlphabet& a, const SuiteOptions& o) {
  Recorder planar("prelie/planar");
  Recorder rooted("prelie/rooted");
  TreeSampler ps(a, sub_seed(o.seed, 1));
  TreeSampler rs(a, sub_seed(o.seed, 2));
  auto pl = [](const PlanarComb& x, const PlanarComb& y) { return prelie_planar(x, y); };
  auto rl = [](const RootedComb& x, const RootedComb& y) { return prelie_rooted(x, y); };
  for (std::size_t w = 3; w <= o.max_weight; ++w) {
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
      auto c = ps.composition(w, 3);
      if (c.empty()) break;
      PlanarComb x(ps.planar(c[0])), y(ps.planar(c[1])), z(ps.planar(c[2]));
      planar.record(associator(x, y, z, pl) == associator(y, x, z, pl), [&] {
        return describe({{"x", format(x, a)}, {"y", format(y, a)}, {"z", format(z, a)}});
      });
      auto cr = rs.composition(w, 3);
      RootedComb rx(rs.rooted(cr[0])), ry(rs.rooted(cr[1])), rz(rs.rooted(cr[2]));
      rooted.record(associator(rx, ry, rz, rl) == associator(ry, rx, rz, rl), [&] {
        return describe({{"x", format(rx, a)}, {"y", format(ry, a)}, {"z", format(rz, a)}});
      });
    }
  }
  return {planar.take(), rooted.take()};
}

// ---------------------------------------------------------------- NAP

std::vector<CheckResult> nap_suite(const DecorationAlphabet& a, const SuiteOptions& o) {
  Recorder planar("nap/planar");
  Recorder rooted("nap/rooted");
  TreeSampler ps(a, sub_seed(o.seed, 3));
  TreeSampler rs(a, sub_seed(o.seed, 4));
  for (std::size_t w = 3; w <= o.max_weight; ++w) {
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
      auto c = ps.composition(w, 3);
      if (c.empty()) break;
      PlanarComb x(ps.planar(c[0])), y(ps.planar(c[1])), z(ps.planar(c[2]));
      planar.record(star_planar(x, star_planar(y, z)) == star_planar(y, star_planar(x, z)), [&] {
        return describe({{"x", format(x, a)}, {"y", format(y, a)}, {"z", format(z, a)}});
      });
      auto cr = rs.composition(w, 3);
      RootedTree rx = rs.rooted(cr[0]), ry = rs.rooted(cr[1]), rz = rs.rooted(cr[2]);
      rooted.record(star_rooted(rx, star_rooted(ry, rz)) == star_rooted(ry, star_rooted(rx, rz)), [&] {
        return describe({{"x", serialize(rx, a)}, {"y", serialize(ry, a)}, {"z", serialize(rz, a)}});
      });
    }
  }
  return {planar.take(), rooted.take()};
}

// ---------------------------------------------------------------- brace

bool brace_axiom_holds(std::span<const PlanarTree> outer, std::span<const PlanarTree> inner, const PlanarTree& c) {
  std::vector<PlanarComb> args;
  for (const auto& t : outer) args.emplace_back(t);
  PlanarComb lhs = brace(std::span<const PlanarComb>(args), brace(inner, c));
  return lhs == brace_composition(outer, inner, c);
}

std::vector<PlanarTree> trees_up_to(TreeTables& tables, std::size_t max_weight) {
  std::vector<PlanarTree> out;
  for (std::size_t w = 1; w <= max_weight; ++w) out.insert(out.end(), tables.planar(w).begin(), tables.planar(w).end());
  return out;
}

void brace_exhaustive(const DecorationAlphabet& a, const SuiteOptions& o, Recorder& rec) {
  TreeTables tables(a);
  auto args = trees_up_to(tables, std::min<std::size_t>(2, o.max_weight));
  auto targets = trees_up_to(tables, std::min<std::size_t>(3, o.max_weight));
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n) {
      // Odometer over the m + n argument slots.
      std::vector<std::size_t> idx(m + n, 0);
      while (true) {
        std::vector<PlanarTree> outer, inner;
        for (std::size_t i = 0; i < m; ++i) outer.push_back(args[idx[i]]);
        for (std::size_t i = 0; i < n; ++i) inner.push_back(args[idx[m + i]]);
        for (const auto& c : targets)
          rec.record(brace_axiom_holds(outer, inner, c), [&] {
            return describe({{"a", list_text(outer, a)}, {"b", list_text(inner, a)}, {"c", serialize(c, a)}});
          });
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == args.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
}

void brace_random(const DecorationAlphabet& a, const SuiteOptions& o, Recorder& rec) {
  TreeSampler s(a, sub_seed(o.seed, 5));
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t w = m + n + 1; w <= o.max_weight; ++w)
        for (std::size_t trial = 0; trial < o.trials; ++trial) {
          auto c = s.composition(w, m + n + 1);
          if (c.empty()) break;
          std::vector<PlanarTree> outer, inner;
          for (std::size_t i = 0; i < m; ++i) outer.push_back(s.planar(c[i]));
          for (std::size_t i = 0; i < n; ++i) inner.push_back(s.planar(c[m + i]));
          PlanarTree target = s.planar(c[m + n]);
          rec.record(brace_axiom_holds(outer, inner, target), [&] {
            return describe({{"a", list_text(outer, a)}, {"b", list_text(inner, a)}, {"c", serialize(target, a)}});
          });
        }
}

// <a,b;<c;d>> = <a,b,c;d> + <a,<b;c>;d> + <<a,b;c>;d> + <a,c,b;d> + <<a;c>,b;d> + <c,a,b;d>
bool four_variable_identity(const PlanarTree& a, const PlanarTree& b, const PlanarTree& c, const PlanarTree& d) {
  auto br = [](std::vector<PlanarComb> args, const PlanarComb& target) {
    return brace(std::span<const PlanarComb>(args), target);
  };
  PlanarComb A(a), B(b), C(c), D(d);
  PlanarComb lhs = br({A, B}, br({C}, D));
  PlanarComb rhs = br({A, B, C}, D);
  rhs += br({A, br({B}, C)}, D);
  rhs += br({br({A, B}, C)}, D);
  rhs += br({A, C, B}, D);
  rhs += br({br({A}, C), B}, D);
  rhs += br({C, A, B}, D);
  return lhs == rhs;
}

void brace_four_variable(const DecorationAlphabet& a, const SuiteOptions& o, Recorder& rec) {
  TreeSampler s(a, sub_seed(o.seed, 6));
  for (std::size_t w = 4; w <= std::max<std::size_t>(4, o.max_weight); ++w)
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
      auto c = s.composition(w, 4);
      if (c.empty()) break;
      PlanarTree x = s.planar(c[0]), y = s.planar(c[1]), z = s.planar(c[2]), t = s.planar(c[3]);
      rec.record(four_variable_identity(x, y, z, t), [&] {
        return describe({{"a", serialize(x, a)}, {"b", serialize(y, a)}, {"c", serialize(z, a)}, {"d", serialize(t, a)}});
      });
    }
}

std::vector<CheckResult> brace_suite(const DecorationAlphabet& a, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  if (o.exhaustive) {
    Recorder ex("brace/exhaustive");
    brace_exhaustive(a, o, ex);
    out.push_back(ex.take());
  }
  Recorder rnd("brace/random");
  brace_random(a, o, rnd);
  out.push_back(rnd.take());
  Recorder four("brace/four-variable");
  brace_four_variable(a, o, four);
  out.push_back(four.take());
  return out;
}

// ---------------------------------------------------------------- E1

bool e1_holds(const DecorationAlphabet& a, const PlanarTree& x, Symbol d, const Forest& y) {
  PlanarComb lhs = star_planar(x, b_planar(a, d, y));
  PlanarComb rhs = graft_on_root(a, d, shuffle(std::span<const PlanarTree>(&x, 1), y));
  return lhs == rhs;
}

std::vector<CheckResult> e1_suite(const DecorationAlphabet& a, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  if (o.exhaustive) {
    Recorder ex("e1/exhaustive");
    TreeTables tables(a);
    const std::size_t cap = std::min<std::size_t>(3, o.max_weight);
    for (const auto& x : trees_up_to(tables, cap))
      for (std::size_t fw = 0; fw <= cap; ++fw)
        for (const auto& y : tables.planar_forests(fw))
          for (std::size_t i = 0; i < a.size(); ++i)
            ex.record(e1_holds(a, x, a.symbol(i), y), [&] {
              return describe({{"x", serialize(x, a)}, {"d", a.names()[i]}, {"y", serialize(y, a)}});
            });
    out.push_back(ex.take());
  }
  Recorder rnd("e1/random");
  TreeSampler s(a, sub_seed(o.seed, 7));
  for (std::size_t w = 2; w <= o.max_weight; ++w)
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
      // x of weight xw, root d, forest of the remaining weight (possibly empty).
      std::size_t xw = 1 + s.below(w - 1);
      if (s.planar_count(xw) == 0) continue;
      Symbol d = a.symbol(s.below(a.size()));
      std::size_t fw = w - xw >= a.grade(d) ? w - xw - a.grade(d) : 0;
      if (s.forest_count(fw) == 0) continue;
      PlanarTree x = s.planar(xw);
      Forest y = s.forest(fw);
      rnd.record(e1_holds(a, x, d, y), [&] {
        return describe({{"x", serialize(x, a)}, {"d", a.name(d)}, {"y", serialize(y, a)}});
      });
    }
  out.push_back(rnd.take());
  return out;
}

// ---------------------------------------------------------------- shuffle

std::vector<CheckResult> shuffle_suite(const DecorationAlphabet& a, const SuiteOptions& o) {
  Recorder comm("shuffle/commutative");
  Recorder assoc("shuffle/associative");
  TreeSampler s(a, sub_seed(o.seed, 8));
  for (std::size_t w = 2; w <= o.max_weight; ++w)
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
      // Forests may be empty: split w into three nonnegative weights.
      std::size_t w1 = s.below(w + 1);
      std::size_t w2 = s.below(w - w1 + 1);
      std::size_t w3 = w - w1 - w2;
      if (s.forest_count(w1) == 0 || s.forest_count(w2) == 0 || s.forest_count(w3) == 0) continue;
      ForestComb x(s.forest(w1)), y(s.forest(w2)), z(s.forest(w3));
      comm.record(shuffle(x, y) == shuffle(y, x),
                  [&] { return describe({{"x", format(x, a)}, {"y", format(y, a)}}); });
      assoc.record(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z)), [&] {
        return describe({{"x", format(x, a)}, {"y", format(y, a)}, {"z", format(z, a)}});
      });
    }
  return {comm.take(), assoc.take()};
}

}  // namespace

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::prelie, Axiom::nap, Axiom::brace, Axiom::e1, Axiom::shuffle})
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::prelie: return "prelie";
    case Axiom::nap: return "nap";
    case Axiom::brace: return "brace";
    case Axiom::e1: return "e1";
    case Axiom::shuffle: return "shuffle";
  }
  return "?";
}

PlanarComb brace_composition(std::span<const PlanarTree> outer, std::span<const PlanarTree> inner,
                             const PlanarTree& target) {
  const std::size_t m = outer.size();
  const std::size_t n = inner.size();
  PlanarComb out;
  // cuts[0..2n): boundaries of the intervals A_0 | A_1 | ... | A_2n of outer.
  std::vector<std::size_t> cuts(2 * n, 0);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t slot, std::size_t from) {
    if (slot == cuts.size()) {
      std::vector<PlanarComb> args;
      std::size_t begin = 0;
      for (std::size_t j = 0; j <= 2 * n; ++j) {
        std::size_t end = j < 2 * n ? cuts[j] : m;
        auto interval = outer.subspan(begin, end - begin);
        if (j % 2 == 0) {
          for (const auto& t : interval) args.emplace_back(t);
        } else {
          args.push_back(brace(interval, inner[j / 2]));
        }
        begin = end;
      }
      out += brace(std::span<const PlanarComb>(args), PlanarComb(target));
      return;
    }
    for (std::size_t c = from; c <= m; ++c) {
      cuts[slot] = c;
      choose(slot + 1, c);
    }
  };
  choose(0, 0);
  return out;
}

std::vector<CheckResult> run_axiom_suite(Axiom axiom, const DecorationAlphabet& alphabet, const SuiteOptions& options) {
  switch (axiom) {
    case Axiom::prelie: return prelie_suite(alphabet, options);
    case Axiom::nap: return nap_suite(alphabet, options);
    case Axiom::brace: return brace_suite(alphabet, options);
    case Axiom::e1: return e1_suite(alphabet, options);
    case Axiom::shuffle: return shuffle_suite(alphabet, options);
  }
  return {};
}

}  // namespace bracetree
