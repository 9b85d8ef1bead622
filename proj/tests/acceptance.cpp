// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bracetree/axioms.hpp"
#include "bracetree/enumerate.hpp"
#include "bracetree/freeness.hpp"
#include "bracetree/products.hpp"
#include "bracetree/series.hpp"
#include "bracetree/text.hpp"
#include "oracles.hpp"

using namespace bracetree;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  int budget_seconds;
  std::function<void(Check&)> body;
};

Series fd_uniform(long d, std::size_t order) { return Series::monomial(order, 1, d); }

void planar_and_rooted_counts(Check& c) {
  auto one = DecorationAlphabet::uniform(1);
  const std::vector<std::size_t> planar{1, 1, 2, 5, 14}, rooted{1, 1, 2, 4, 9};
  for (std::size_t n = 1; n <= 5; ++n) {
    c.expect(enumerate_planar(n, one).size() == planar[n - 1], "planar weight " + std::to_string(n));
    c.expect(enumerate_rooted(n, one).size() == rooted[n - 1], "rooted weight " + std::to_string(n));
  }
}

void dimension_series(Check& c) {
  auto one = DecorationAlphabet::uniform(1);
  auto brace_dims = brace_hilbert(fd_uniform(1, 7), 7);
  auto prelie_dims = prelie_hilbert(fd_uniform(1, 7), 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    c.expect(brace_dims[n] == enumerate_planar(n, one).size(), "brace degree " + std::to_string(n));
    c.expect(prelie_dims[n] == enumerate_rooted(n, one).size(), "pre-Lie degree " + std::to_string(n));
  }
  c.expect(brace_dims[7] == 132, "132 planar trees of weight 7");
  c.expect(prelie_dims[7] == 48, "48 rooted trees of weight 7");
}

void generator_counts(Check& c) {
  for (long D = 1; D <= 3; ++D) {
    auto g = generator_hilbert(fd_uniform(D, 7), 7);
    for (std::size_t n = 1; n <= 7; ++n)
      c.expect(g[n] == Rational(oracle::generator_polynomial(n, D)),
               "D=" + std::to_string(D) + " n=" + std::to_string(n));
  }
  auto g1 = generator_hilbert(fd_uniform(1, 7), 7);
  const std::vector<long> d1{1, 0, 0, 1, 3, 11, 34};
  for (std::size_t n = 1; n <= 7; ++n) c.expect(g1[n] == d1[n - 1], "D=1 list");
  auto g2 = generator_hilbert(fd_uniform(2, 4), 4);
  c.expect(g2[3] == 2 && g2[4] == 20, "D=2 degrees 3 and 4");
}

void worked_examples(Check& c) {
  DecorationAlphabet a({"a", "b", "c", "d"});
  // Three-term rooted pre-Lie product, compared as a multiset of trees.
  auto three = prelie_rooted(parse_rooted("a", a), parse_rooted("d[b,c]", a));
  std::map<std::string, mpq_class> expected3{{"d[a,b,c]", 1}, {"d[c,b[a]]", 1}, {"d[b,c[a]]", 1}};
  c.expect(oracle::shape_multiset(three, a) == expected3, "three-term pre-Lie example");

  // Six-term brace product.
  auto six = brace(std::vector{parse_planar("a", a), parse_planar("b", a)}, parse_planar("d[c]", a));
  std::map<std::string, mpq_class> expected6;
  for (auto s : {"d[a,b,c]", "d[a,c[b]]", "d[a,c,b]", "d[c[a,b]]", "d[c[a],b]", "d[c,a,b]"})
    expected6[serialize(canonicalize(parse_planar(s, a)), a)] += 1;
  c.expect(oracle::shape_multiset(six, a) == expected6, "six-term brace example");
  std::map<std::string, int> shapes;
  for (const auto& [t, coeff] : six) shapes[oracle::bare_shape(t)] += static_cast<int>(coeff.get_num().get_si());
  c.expect(shapes == std::map<std::string, int>{{"(()()())", 3}, {"((())())", 2}, {"((()()))", 1}},
           "3 corollas, 2 leaf-plus-chain, 1 forked child");
}

void axiom_suites(Check& c) {
  SuiteOptions options{.max_weight = 6, .trials = 100, .seed = 42};
  auto two = DecorationAlphabet::uniform(2);
  auto report = [&](const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
      c.expect(r.passed(), r.name + ": " + std::to_string(r.failures) + " counterexamples");
      c.expect(r.instances > 0, r.name + ": no instances");
    }
  };
  for (auto ax : {Axiom::prelie, Axiom::nap, Axiom::e1, Axiom::shuffle}) report(run_axiom_suite(ax, two, options));
  // Random and four-variable brace instances over two symbols; the exhaustive
  // small cases over one symbol. The two-symbol exhaustive run is a separate test.
  SuiteOptions random_only = options;
  random_only.exhaustive = false;
  report(run_axiom_suite(Axiom::brace, two, random_only));
  report(run_axiom_suite(Axiom::brace, DecorationAlphabet::uniform(1), options));
}

void nap_freeness(Check& c) {
  auto r1 = verify_nap_freeness(DecorationAlphabet::uniform(1), 6);
  auto r2 = verify_nap_freeness(DecorationAlphabet::uniform(2), 4);
  c.expect(r1.passed() && r2.passed(), "complement equals generator count");
  std::vector<std::size_t> s1, s2;
  for (const auto& d : r1.degrees) s1.push_back(d.complement);
  for (const auto& d : r2.degrees) s2.push_back(d.complement);
  c.expect(s1 == std::vector<std::size_t>{1, 0, 0, 1, 3, 11}, "D=1 complement sizes");
  c.expect(s2 == std::vector<std::size_t>{2, 0, 2, 20}, "D=2 complement sizes");
}

void prelie_generation_rank(Check& c) {
  for (auto [D, n] : {std::pair<std::size_t, std::size_t>{1, 6}, {2, 4}}) {
    auto r = verify_prelie_generation(DecorationAlphabet::uniform(D), n);
    c.expect(r.passed(), "D=" + std::to_string(D));
    for (const auto& d : r.degrees)
      c.expect(d.prelie_full_rank == true, "D=" + std::to_string(D) + " n=" + std::to_string(d.n));
  }
}

void series_composition(Check& c) {
  const std::size_t N = 10;
  std::vector<std::pair<std::string, Series>> inputs{{"x", fd_uniform(1, N)},
                                                     {"2x", fd_uniform(2, N)},
                                                     {"3x", fd_uniform(3, N)},
                                                     {"x+x^2", fd_uniform(1, N) + Series::monomial(N, 2)}};
  for (const auto& [name, fd] : inputs)
    c.expect(prelie_hilbert(generator_hilbert(fd, N), N) == brace_hilbert(fd, N), name);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "planar and rooted tree counts, weights 1-5", 1, planar_and_rooted_counts},
      {2, "dimension series match enumeration through weight 7", 5, dimension_series},
      {3, "generator counts for D = 1, 2, 3 up to degree 7", 1, generator_counts},
      {4, "worked pre-Lie and brace examples", 1, worked_examples},
      {5, "axiom suites", 30, axiom_suites},
      {6, "complement of the star span equals the generator count", 60, nap_freeness},
      {7, "pre-Lie products and generators reach full rank", 120, prelie_generation_rank},
      {8, "pre-Lie series of the generators is the brace series, order 10", 1, series_composition},
  };

  int failed = 0;
  for (const auto& k : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      k.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > k.budget_seconds) c.expect(false, "over the " + std::to_string(k.budget_seconds) + " s budget");
    if (!c.ok) ++failed;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << k.id << ": " << k.title << " (" << std::fixed
              << std::setprecision(3) << seconds << " s)" << c.notes.str() << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
