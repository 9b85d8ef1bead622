#include <doctest.h>

#include <set>

#include "bracetree/enumerate.hpp"
#include "bracetree/error.hpp"
#include "bracetree/sampling.hpp"
#include "bracetree/text.hpp"
#include "bracetree/tree.hpp"
#include "oracles.hpp"

using namespace bracetree;

namespace {
const DecorationAlphabet abcd({"a", "b", "c", "d"});
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(DecorationAlphabet({}), DomainError);
  CHECK_THROWS_AS(DecorationAlphabet({"a", "a"}), DomainError);
  CHECK_THROWS_AS(DecorationAlphabet({"1a"}), DomainError);
  CHECK_THROWS_AS(DecorationAlphabet({"a", "b"}, {1}), DomainError);
  CHECK_THROWS_AS(DecorationAlphabet({"a"}, {0}), DomainError);
  auto u = DecorationAlphabet::uniform(3);
  CHECK(u.names() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK_THROWS_AS(u.at("y"), UnknownDecoration);
  DecorationAlphabet graded({"p", "q", "r"}, {1, 2, 2});
  CHECK(graded.degree_counts(3) == std::vector<std::size_t>{0, 1, 2, 0});
}

TEST_CASE("b_planar keeps child order") {
  auto bc = b_planar(abcd, "b", {b_planar(abcd, "c", {})});
  auto d = b_planar(abcd, "d", {});
  auto left = b_planar(abcd, "a", {bc, d});
  auto right = b_planar(abcd, "a", {d, bc});
  CHECK(serialize(b_planar(abcd, "a", {}), abcd) == "a");
  CHECK(serialize(left, abcd) == "a[b[c],d]");
  CHECK(serialize(right, abcd) == "a[d,b[c]]");
  CHECK(left != right);
  CHECK(canonicalize(left) == canonicalize(right));
  CHECK(weight(left) == 4);
  CHECK(root_fertility(left) == 2);
}

TEST_CASE("b_rooted is independent of child order") {
  auto ba = b_rooted(abcd, "b", {b_rooted(abcd, "a", {})});
  auto c = b_rooted(abcd, "c", {});
  CHECK(b_rooted(abcd, "d", {ba, c}) == b_rooted(abcd, "d", {c, ba}));
  CHECK(serialize(b_rooted(abcd, "d", {ba, c}), abcd) == serialize(b_rooted(abcd, "d", {c, ba}), abcd));
  CHECK(serialize(b_rooted(abcd, "a", {}), abcd) == "a");
}

TEST_CASE("canonical order: weight, then root, then children") {
  auto a = parse_planar("a", abcd);
  auto b = parse_planar("b", abcd);
  auto ab = parse_planar("a[b]", abcd);
  auto ba = parse_planar("b[a]", abcd);
  CHECK(a < b);
  CHECK(b < ab);
  CHECK(ab < ba);
  CHECK(parse_planar("a[a,b]", abcd) < parse_planar("a[b,a]", abcd));
  CHECK(parse_planar("a[a,a]", abcd) < parse_planar("a[a[a]]", abcd));
}

TEST_CASE("parse and serialize") {
  auto t = parse_planar(" d [ a , c[b] ] ", abcd);
  CHECK(t.root() == abcd.at("d"));
  REQUIRE(t.fertility() == 2);
  CHECK(serialize(t.children()[0], abcd) == "a");
  CHECK(serialize(t.children()[1], abcd) == "c[b]");
  CHECK(serialize(t, abcd) == "d[a,c[b]]");

  try {
    parse_planar("d[", abcd);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_planar("d[a,]", abcd), ParseError);
  CHECK_THROWS_AS(parse_planar("d[a] b", abcd), ParseError);
  CHECK_THROWS_AS(parse_planar("d[]", abcd), ParseError);
  CHECK_THROWS_AS(parse_planar("e", abcd), UnknownDecoration);

  CHECK(serialize(parse_rooted("d[c,b[a]]", abcd), abcd) == "d[c,b[a]]");
  CHECK(serialize(parse_rooted("d[b[a],c]", abcd), abcd) == "d[c,b[a]]");

  CHECK(parse_forest("", abcd).empty());
  CHECK(parse_forest("()", abcd).empty());
  auto f = parse_forest("(a, b[c])", abcd);
  CHECK(serialize(f, abcd) == "(a,b[c])");
  CHECK(parse_forest("a,b[c]", abcd) == f);
  CHECK(collect_identifiers("2*d[a,c] - 1/2*a") == std::vector<std::string>{"d", "a", "c"});
}

TEST_CASE("serialize then parse is the identity on random trees") {
  TreeSampler s(abcd, 7);
  for (std::size_t w = 1; w <= 9; ++w)
    for (int i = 0; i < 30; ++i) {
      auto t = s.planar(w);
      CHECK(parse_planar(serialize(t, abcd), abcd) == t);
      auto r = s.rooted(std::min<std::size_t>(w, 6));
      CHECK(parse_rooted(serialize(r, abcd), abcd) == r);
    }
}

TEST_CASE("embed and canonicalize") {
  TreeSampler s(abcd, 3);
  for (int i = 0; i < 50; ++i) {
    auto r = s.rooted(5);
    CHECK(canonicalize(embed(r)) == r);
    auto p = s.planar(6);
    CHECK(weight(canonicalize(p)) == weight(p));
    CHECK(root_fertility(canonicalize(p)) == root_fertility(p));
  }
  auto a = DecorationAlphabet({"a"});
  CHECK(serialize(canonicalize(parse_planar("a", a)), a) == "a");
}

TEST_CASE("graded weights") {
  DecorationAlphabet g({"p", "q"}, {1, 2});
  auto t = parse_planar("q[p,q]", g);
  CHECK(weight(t) == 5);
  CHECK(enumerate_planar(1, g).size() == 1);
  CHECK(enumerate_planar(2, g).size() == 2);  // p[p], q
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t2 : enumerate_planar(n, g)) CHECK(weight(t2) == n);
}

TEST_CASE("planar enumeration counts") {
  auto one = DecorationAlphabet::uniform(1);
  CHECK(enumerate_planar(3, one).size() == 2);
  CHECK(enumerate_planar(5, one).size() == 14);
  CHECK(enumerate_planar(6, one).size() == 42);
  CHECK(enumerate_planar(0, one).empty());
  for (std::uint64_t D = 1; D <= 3; ++D) {
    auto counts = oracle::planar_counts(6, D);
    auto a = DecorationAlphabet::uniform(D);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_planar(n, a).size() == counts[n]);
  }
}

TEST_CASE("planar enumeration lists distinct trees in canonical order") {
  auto a = DecorationAlphabet::uniform(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto trees = enumerate_planar(n, a);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
  }
}

TEST_CASE("rooted enumeration counts") {
  auto one = DecorationAlphabet::uniform(1);
  CHECK(enumerate_rooted(4, one).size() == 4);
  CHECK(enumerate_rooted(5, one).size() == 9);
  CHECK(enumerate_rooted(6, one).size() == 20);
  for (std::size_t D = 1; D <= 3; ++D) {
    auto a = DecorationAlphabet::uniform(D);
    for (std::size_t n = 1; n <= (D == 1 ? 8u : 5u); ++n) {
      auto trees = enumerate_rooted(n, a);
      auto expected = oracle::rooted_by_dedup(n, a);
      CHECK(std::set<RootedTree>(trees.begin(), trees.end()) == expected);
      CHECK(trees.size() == expected.size());
      CHECK(std::is_sorted(trees.begin(), trees.end()));
    }
  }
}

TEST_CASE("sampler is reproducible and covers every tree") {
  auto a = DecorationAlphabet::uniform(2);
  TreeSampler s1(a, 11), s2(a, 11);
  for (int i = 0; i < 20; ++i) CHECK(s1.planar(5) == s2.planar(5));

  TreeSampler s(a, 5);
  std::map<PlanarTree, int> seen;
  const auto all = enumerate_planar(3, a);  // 16 trees
  for (int i = 0; i < 3200; ++i) ++seen[s.planar(3)];
  CHECK(seen.size() == all.size());
  for (const auto& [t, count] : seen) {
    CHECK(count > 120);
    CHECK(count < 290);
  }
  CHECK(s.planar_count(3) == 16);
  CHECK(s.forest_count(2) == 8);  // a[b]-type 4 + words of two leaves 4
  CHECK_THROWS_AS(s.planar(0), DomainError);

  for (int i = 0; i < 50; ++i) {
    auto c = s.composition(7, 3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] + c[1] + c[2] == 7);
    CHECK(std::all_of(c.begin(), c.end(), [](std::size_t x) { return x >= 1; }));
  }
  CHECK(s.composition(2, 3).empty());
}
