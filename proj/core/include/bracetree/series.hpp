#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <nlohmann/json.hpp>
#include <vector>

#include "bracetree/alphabet.hpp"

namespace bracetree {

using Rational = mpq_class;

/// Truncated formal power series: exact rational coefficients for degrees
/// 0..order. Binary operations on series of different orders truncate to the
/// smaller order, which the result reports.
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Missing coefficients are zero; coefficients beyond `order` are dropped.
  Series(std::size_t order, std::vector<Rational> coeffs);

  static Series one(std::size_t order);
  static Series monomial(std::size_t order, std::size_t degree, const Rational& c = 1);
  /// F_D = sum of d_n x^n for the alphabet's degree counts.
  static Series from_alphabet(const DecorationAlphabet& alphabet, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, Rational c) { coeffs_.at(n) = std::move(c); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Series truncated(std::size_t order) const;
  bool is_integral() const;
  bool is_nonnegative_integral() const;
  /// Multiplicative inverse; throws DomainError when the constant term is zero.
  Series inverse() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& s, const Series& a);
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series sub(const Series& a, const Series& b) { return a - b; }
inline Series mul(const Series& a, const Series& b) { return a * b; }

/// Product over i = 1..order of (1 - x^i)^{a_i}, where a_i = exponents[i].
/// Throws DomainError on a non-integer exponent.
Series euler_product(const Series& exponents, std::size_t order);
Series euler_product(const Series& exponents);

/// The integer sequence a (a_0 = 0) with prod (1 - x^i)^{-a_i} = p up to the
/// order of p. Requires p_0 = 1; throws DomainError when some a_i would not
/// be an integer.
Series inv_euler(const Series& p);

/// Dimensions t_n of the free pre-Lie (equivalently, free NAP) algebra on a
/// graded set with series F_D: the solution of
/// F = F_D / prod (1 - x^i)^{t_i}, solved degree by degree.
Series prelie_hilbert(const Series& fd, std::size_t order);

/// Dimensions t'_n of the free brace algebra: the solution of F - F^2 = F_D
/// with F(0) = 0.
Series brace_hilbert(const Series& fd, std::size_t order);

/// Generator counts of the brace algebra as a free NAP / pre-Lie algebra:
/// F_Br * prod (1 - x^i)^{t'_i}.
Series generator_hilbert(const Series& fd, std::size_t order);

/// Exponents w_i with 1 / (1 - F_Br) = prod (1 - x^i)^{-w_i}.
Series w_sequence(const Series& fd, std::size_t order);

/// {"order": N, "coeffs": ["0", "1", ...]}; fractions as "p/q".
nlohmann::ordered_json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

}  // namespace bracetree
