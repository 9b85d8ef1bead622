#include "bracetree/freeness.hpp"

#include <chrono>
#include <future>

#include "bracetree/error.hpp"
#include "bracetree/linalg.hpp"
#include "bracetree/series.hpp"
#include "bracetree/text.hpp"

namespace bracetree {

DegreeBasis::DegreeBasis(std::size_t degree, TreeTables& tables) : degree_(degree), trees_(tables.planar(degree)) {
  for (std::size_t i = 0; i < trees_.size(); ++i) index_.emplace(trees_[i], i);
}

std::optional<std::size_t> DegreeBasis::index_of(const PlanarTree& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<mpz_class> DegreeBasis::coordinates(const PlanarComb& x) const {
  std::vector<mpz_class> v(trees_.size());
  for (const auto& [t, c] : x) {
    auto i = index_of(t);
    if (!i) throw DomainError("term of weight " + std::to_string(t.weight()) + " outside the degree " +
                              std::to_string(degree_) + " basis");
    if (c.get_den() != 1) throw DomainError("non-integer coefficient in basis coordinates");
    v[*i] = c.get_num();
  }
  return v;
}

SpanResult star_span(const DegreeBasis& basis, TreeTables& tables) {
  const std::size_t n = basis.degree();
  SpanResult result;
  result.degree = n;
  result.dim = basis.size();

  // Block by root fertility: local column index per block.
  std::map<std::size_t, std::vector<std::size_t>> block_columns;
  std::vector<std::size_t> local_index(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto& cols = block_columns[basis[i].fertility()];
    local_index[i] = cols.size();
    cols.push_back(i);
  }
  std::map<std::size_t, EchelonBasis> eliminations;
  for (const auto& [l, cols] : block_columns) eliminations.emplace(l, EchelonBasis(cols.size()));

  for (std::size_t i = 1; i < n; ++i) {
    for (const auto& t1 : tables.planar(i)) {
      for (const auto& t2 : tables.planar(n - i)) {
        std::size_t l = t2.fertility() + 1;
        auto product = star_planar(t1, t2);
        std::vector<mpz_class> v(block_columns.at(l).size());
        for (const auto& [t, c] : product) {
          if (t.fertility() != l) throw std::logic_error("star product left its fertility block");
          v[local_index[*basis.index_of(t)]] = c.get_num();
        }
        eliminations.at(l).insert(std::move(v));
      }
    }
  }

  for (const auto& [l, cols] : block_columns) {
    const auto& e = eliminations.at(l);
    BlockCount block{l, cols.size(), e.rank(), cols.size() - e.rank()};
    result.blocks.push_back(block);
    for (std::size_t c : e.pivots()) result.pivots.push_back(cols[c]);
    for (std::size_t c : e.non_pivots()) result.complement.push_back(cols[c]);
    result.span_dim += e.rank();
  }
  std::sort(result.pivots.begin(), result.pivots.end());
  std::sort(result.complement.begin(), result.complement.end());
  return result;
}

SpanResult star_span(std::size_t n, const DecorationAlphabet& alphabet) {
  TreeTables tables(alphabet);
  DegreeBasis basis(n, tables);
  return star_span(basis, tables);
}

GenerationResult prelie_generation(const DegreeBasis& basis, const SpanResult& span, TreeTables& tables) {
  const std::size_t n = basis.degree();
  EchelonBasis e(basis.size());
  for (std::size_t i : span.complement) {
    std::vector<mpz_class> unit(basis.size());
    unit[i] = 1;
    e.insert(std::move(unit));
  }
  for (std::size_t i = 1; i < n && e.rank() < basis.size(); ++i)
    for (const auto& t1 : tables.planar(i)) {
      for (const auto& t2 : tables.planar(n - i)) {
        e.insert(basis.coordinates(prelie_planar(t1, t2)));
        if (e.rank() == basis.size()) break;
      }
      if (e.rank() == basis.size()) break;
    }
  return {n, basis.size(), e.rank()};
}

std::size_t default_max_degree(const DecorationAlphabet& alphabet) {
  switch (alphabet.size()) {
    case 1: return 7;
    case 2: return 5;
    case 3: return 4;
    default: return 3;
  }
}

namespace {

DegreeReport verify_degree(std::size_t n, TreeTables& tables, const Series& generators, const FreenessOptions& options) {
  auto start = std::chrono::steady_clock::now();
  DegreeReport r;
  r.n = n;
  DegreeBasis basis(n, tables);
  SpanResult span = star_span(basis, tables);
  r.dim = span.dim;
  r.star_span = span.span_dim;
  r.complement = span.complement.size();
  r.expected_generators = generators[n].get_num().get_ui();
  r.blocks = span.blocks;
  for (std::size_t i : span.complement) r.complement_trees.push_back(serialize(basis[i], tables.alphabet()));
  if (options.check_generation) {
    auto gen = prelie_generation(basis, span, tables);
    r.prelie_rank = gen.rank;
    r.prelie_full_rank = gen.full_rank();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

FreenessReport verify_freeness(const DecorationAlphabet& alphabet, std::size_t max_degree,
                               const FreenessOptions& options) {
  FreenessReport report;
  report.alphabet = alphabet.names();
  if (max_degree == 0) return report;
  Series generators = generator_hilbert(Series::from_alphabet(alphabet, max_degree), max_degree);

  if (options.parallel) {
    std::vector<std::future<DegreeReport>> tasks;
    for (std::size_t n = 1; n <= max_degree; ++n)
      tasks.push_back(std::async(std::launch::async, [&, n] {
        TreeTables own(alphabet);
        return verify_degree(n, own, generators, options);
      }));
    for (auto& t : tasks) report.degrees.push_back(t.get());
  } else {
    TreeTables tables(alphabet);
    for (std::size_t n = 1; n <= max_degree; ++n) report.degrees.push_back(verify_degree(n, tables, generators, options));
  }

  for (const auto& d : report.degrees) {
    if (d.dim == 0) continue;
    if (options.check_nap && d.complement != d.expected_generators)
      report.failures.push_back("degree " + std::to_string(d.n) + ": complement of Br*Br has size " +
                                std::to_string(d.complement) + " but the generator series predicts " +
                                std::to_string(d.expected_generators));
    if (options.check_generation && d.prelie_rank && *d.prelie_rank != d.dim)
      report.failures.push_back("degree " + std::to_string(d.n) + ": complement plus pre-Lie products have rank " +
                                std::to_string(*d.prelie_rank) + " < " + std::to_string(d.dim) +
                                " (missing quotient dimension " + std::to_string(d.dim - *d.prelie_rank) + ")");
  }
  return report;
}

FreenessReport verify_nap_freeness(const DecorationAlphabet& alphabet, std::size_t max_degree, bool parallel) {
  return verify_freeness(alphabet, max_degree, {.check_nap = true, .check_generation = false, .parallel = parallel});
}

FreenessReport verify_prelie_generation(const DecorationAlphabet& alphabet, std::size_t max_degree, bool parallel) {
  return verify_freeness(alphabet, max_degree, {.check_nap = false, .check_generation = true, .parallel = parallel});
}

nlohmann::ordered_json to_json(const FreenessReport& report, bool with_timings) {
  nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
  for (const auto& d : report.degrees) {
    nlohmann::ordered_json j = {{"n", d.n},
                        {"dim", d.dim},
                        {"star_span", d.star_span},
                        {"complement", d.complement},
                        {"expected_generators", d.expected_generators},
                        {"prelie_full_rank", d.prelie_full_rank ? nlohmann::ordered_json(*d.prelie_full_rank) : nlohmann::ordered_json()},
                        {"complement_trees", d.complement_trees}};
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& b : d.blocks)
      blocks.push_back({{"fertility", b.fertility}, {"dim", b.dim}, {"span", b.span}, {"complement", b.complement}});
    j["blocks"] = std::move(blocks);
    if (with_timings) j["seconds"] = d.seconds;
    degrees.push_back(std::move(j));
  }
  return {{"alphabet", report.alphabet},
          {"passed", report.passed()},
          {"failures", report.failures},
          {"degrees", std::move(degrees)}};
}

}  // namespace bracetree
