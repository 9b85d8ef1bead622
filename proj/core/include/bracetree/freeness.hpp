#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bracetree/alphabet.hpp"
#include "bracetree/enumerate.hpp"
#include "bracetree/products.hpp"
#include "bracetree/tree.hpp"

namespace bracetree {

/// The planar trees of one weight, in canonical order, with index lookup.
class DegreeBasis {
 public:
  DegreeBasis(std::size_t degree, TreeTables& tables);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<PlanarTree>& trees() const noexcept { return trees_; }
  const PlanarTree& operator[](std::size_t i) const { return trees_.at(i); }
  std::optional<std::size_t> index_of(const PlanarTree& t) const;

  /// Dense integer coordinates; throws DomainError for terms outside the
  /// basis or non-integer coefficients.
  std::vector<mpz_class> coordinates(const PlanarComb& x) const;

 private:
  std::size_t degree_;
  std::vector<PlanarTree> trees_;
  std::map<PlanarTree, std::size_t> index_;
};

/// Span of Br * Br inside the weight-n part, broken down by root fertility.
struct BlockCount {
  std::size_t fertility = 0;
  std::size_t dim = 0;
  std::size_t span = 0;
  std::size_t complement = 0;
};

struct SpanResult {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t span_dim = 0;
  /// Indices into the degree basis, increasing.
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> complement;
  std::vector<BlockCount> blocks;
};

/// Row-reduces star_planar(t1, t2) over all basis pairs of total weight n.
/// Each product lies in the block of fertility fertility(t2) + 1, so the
/// reduction runs block by block and the complement (the non-pivot trees) is
/// graded by weight and root fertility.
SpanResult star_span(const DegreeBasis& basis, TreeTables& tables);
SpanResult star_span(std::size_t n, const DecorationAlphabet& alphabet);

struct GenerationResult {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool full_rank() const noexcept { return rank == dim; }
};

/// Rank of the complement trees together with every prelie_planar(t1, t2)
/// of total weight n.
GenerationResult prelie_generation(const DegreeBasis& basis, const SpanResult& span, TreeTables& tables);

struct DegreeReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t star_span = 0;
  std::size_t complement = 0;
  std::size_t expected_generators = 0;
  std::optional<bool> prelie_full_rank;
  std::optional<std::size_t> prelie_rank;
  std::vector<std::string> complement_trees;
  std::vector<BlockCount> blocks;
  double seconds = 0.0;
};

struct FreenessReport {
  std::vector<std::string> alphabet;
  std::vector<DegreeReport> degrees;
  /// One message per failed check, naming the degree.
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct FreenessOptions {
  bool check_nap = true;
  bool check_generation = true;
  /// Verify degrees concurrently; each task owns its own tree tables.
  bool parallel = false;
};

/// Default degree cap for dense elimination: 7 for one symbol, 5 for two,
/// 4 for three, 3 beyond.
std::size_t default_max_degree(const DecorationAlphabet& alphabet);

FreenessReport verify_freeness(const DecorationAlphabet& alphabet, std::size_t max_degree,
                               const FreenessOptions& options = {});

/// Complement size equals the generator count at every degree <= max_degree.
FreenessReport verify_nap_freeness(const DecorationAlphabet& alphabet, std::size_t max_degree, bool parallel = false);

/// Complement plus pre-Lie products reach full rank at every degree.
FreenessReport verify_prelie_generation(const DecorationAlphabet& alphabet, std::size_t max_degree,
                                        bool parallel = false);

/// {"alphabet": [...], "passed": bool, "failures": [...], "degrees": [{"n", "dim",
/// "star_span", "complement", "expected_generators", "prelie_full_rank",
/// "complement_trees"}, ...]}. Timings only when requested, so repeated runs
/// produce identical bytes.
nlohmann::ordered_json to_json(const FreenessReport& report, bool with_timings = false);

}  // namespace bracetree
