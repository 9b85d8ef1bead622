#include "bracetree/linalg.hpp"

#include <stdexcept>

namespace bracetree {
namespace {

void make_primitive(std::vector<mpz_class>& v, std::size_t upto) {
  mpz_class g = 0;
  for (std::size_t i = 0; i <= upto; ++i) {
    if (v[i] == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (std::size_t i = 0; i <= upto; ++i)
    if (v[i] != 0) mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

EchelonBasis::EchelonBasis(std::size_t dim) : dim_(dim), row_of_pivot_(dim, -1) {}

std::size_t EchelonBasis::reduce(std::vector<mpz_class>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length differs from basis dimension");
  for (std::size_t c = dim_; c-- > 0;) {
    if (v[c] == 0) continue;
    std::ptrdiff_t r = row_of_pivot_[c];
    if (r < 0) return c;
    const auto& row = rows_[static_cast<std::size_t>(r)];
    // v <- row[c] * v - v[c] * row; everything above c is already zero.
    mpz_class factor = v[c];
    if (row[c] == 1) {
      for (std::size_t i = 0; i <= c; ++i)
        if (row[i] != 0) v[i] -= factor * row[i];
    } else {
      mpz_class lead = row[c];
      for (std::size_t i = 0; i <= c; ++i) {
        if (v[i] != 0) v[i] *= lead;
        if (row[i] != 0) v[i] -= factor * row[i];
      }
      make_primitive(v, c);
    }
  }
  return dim_;
}

bool EchelonBasis::insert(std::vector<mpz_class> v) {
  std::size_t c = reduce(v);
  if (c == dim_) return false;
  make_primitive(v, c);
  if (v[c] < 0)
    for (std::size_t i = 0; i <= c; ++i) v[i] = -v[i];
  row_of_pivot_[c] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::insert(const std::vector<mpq_class>& v) {
  mpz_class den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) scaled.push_back(q.get_num() * (den / q.get_den()));
  return insert(std::move(scaled));
}

bool EchelonBasis::contains(std::vector<mpz_class> v) const { return reduce(v) == dim_; }

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] < 0) out.push_back(c);
  return out;
}

}  // namespace bracetree
