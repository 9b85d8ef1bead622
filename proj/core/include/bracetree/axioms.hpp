#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/products.hpp"

namespace bracetree {

enum class Axiom { prelie, nap, brace, e1, shuffle };

std::optional<Axiom> parse_axiom(std::string_view name);
std::string_view axiom_name(Axiom a);

struct SuiteOptions {
  /// Random instances use total weight 3..max_weight (or 2.. for pairs).
  std::size_t max_weight = 6;
  /// Random instances per total weight and configuration.
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  /// Exhaustive small cases in addition to the random ones.
  bool exhaustive = true;
};

/// Outcome of one property over many instances.
struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// Serialized inputs of the first few failing instances.
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return failures == 0; }
};

/// Every configuration of one identity:
///   prelie:  (x o y) o z - x o (y o z) symmetric in x, y; planar and rooted.
///   nap:     x * (y * z) = y * (x * z); planar and rooted.
///   brace:   the composition axiom <a_1..a_m; <b_1..b_n; c>> for m, n <= 2,
///            exhaustive for arguments of weight <= 2 and targets <= 3, plus
///            random instances and the four-variable identity.
///   e1:      x * B_d(y) = B_d(x shuffled into y).
///   shuffle: commutativity and associativity.
std::vector<CheckResult> run_axiom_suite(Axiom axiom, const DecorationAlphabet& alphabet, const SuiteOptions& options);

/// Right-hand side of the brace composition axiom, built from the
/// interval-partition sum independently of brace()'s own recursion.
PlanarComb brace_composition(std::span<const PlanarTree> outer, std::span<const PlanarTree> inner,
                             const PlanarTree& target);

}  // namespace bracetree
