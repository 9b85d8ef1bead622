#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace bracetree {

/// Incremental exact row echelon form over the rationals.
///
/// Rows are kept as primitive integer vectors (fractions cleared, content
/// divided out). The pivot of a row is its last nonzero coordinate, so the
/// non-pivot coordinates are the earliest ones a complement can use. The set
/// of pivot columns depends only on the span of the inserted vectors, not on
/// the order of insertion.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `v` against the stored rows and keeps the remainder if it is
  /// nonzero. Returns true when the rank grew.
  bool insert(std::vector<mpz_class> v);
  bool insert(const std::vector<mpq_class>& v);

  /// True when `v` lies in the span of the stored rows.
  bool contains(std::vector<mpz_class> v) const;

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> non_pivots() const;

 private:
  /// Leaves `v` with a zero in every pivot column it passed; returns the
  /// highest remaining nonzero column, or dim_ when v reduced to zero.
  std::size_t reduce(std::vector<mpz_class>& v) const;

  std::size_t dim_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

}  // namespace bracetree
