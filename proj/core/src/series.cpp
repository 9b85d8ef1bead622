#include "bracetree/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "bracetree/error.hpp"

namespace bracetree {
namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// s *= (1 - x^step)^power, using the generalized binomial series.
void multiply_by_binomial_power(std::vector<Rational>& s, std::size_t step, const mpz_class& power) {
  if (power == 0) return;
  const std::size_t n = s.size() - 1;
  std::vector<Rational> factor;
  Rational c = 1;
  factor.push_back(c);
  for (std::size_t k = 1; k * step <= n; ++k) {
    c *= Rational(mpz_class(power - static_cast<long>(k) + 1) * -1, mpz_class(static_cast<long>(k)));
    c.canonicalize();
    if (sgn(c) == 0) break;
    factor.push_back(c);
  }
  for (std::size_t d = n + 1; d-- > 0;) {
    Rational acc = s[d];
    for (std::size_t k = 1; k < factor.size() && k * step <= d; ++k) acc += factor[k] * s[d - k * step];
    s[d] = acc;
  }
}

mpz_class integer_exponent(const Rational& q, std::size_t i) {
  if (!is_integer(q)) throw DomainError("exponent of degree " + std::to_string(i) + " is not an integer: " + q.get_str());
  return q.get_num();
}

void require_no_constant_term(const Series& fd) {
  if (sgn(fd[0]) != 0) throw DomainError("generating series of the decorations must have zero constant term");
  if (!fd.is_nonnegative_integral())
    throw DomainError("generating series of the decorations must have nonnegative integer coefficients");
}

}  // namespace

Series::Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

Series Series::one(std::size_t order) { return monomial(order, 0); }

Series Series::monomial(std::size_t order, std::size_t degree, const Rational& c) {
  Series s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

Series Series::from_alphabet(const DecorationAlphabet& alphabet, std::size_t order) {
  Series s(order);
  auto counts = alphabet.degree_counts(order);
  for (std::size_t n = 0; n <= order; ++n) s.coeffs_[n] = static_cast<unsigned long>(counts[n]);
  return s;
}

Series Series::truncated(std::size_t order) const {
  order = std::min(order, this->order());
  return Series(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

bool Series::is_integral() const { return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer); }

bool Series::is_nonnegative_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q) && sgn(q) >= 0; });
}

Series Series::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw DomainError("series with zero constant term is not invertible");
  Series r(order());
  r.coeffs_[0] = 1 / coeffs_[0];
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = -acc * r.coeffs_[0];
  }
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

Series operator*(const Rational& s, const Series& a) {
  Series r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Series euler_product(const Series& exponents, std::size_t order) {
  order = std::min(order, exponents.order());
  std::vector<Rational> s(order + 1);
  s[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) multiply_by_binomial_power(s, i, integer_exponent(exponents[i], i));
  return Series(order, std::move(s));
}

Series euler_product(const Series& exponents) { return euler_product(exponents, exponents.order()); }

Series inv_euler(const Series& p) {
  if (p[0] != 1) throw DomainError("inverse Euler transform needs constant term 1");
  // After dividing out the factors of degree < i, the remainder is
  // 1 + a_i x^i + O(x^{i+1}).
  std::vector<Rational> rest = p.coeffs();
  Series a(p.order());
  for (std::size_t i = 1; i <= p.order(); ++i) {
    mpz_class ai = integer_exponent(rest[i], i);
    a.set(i, Rational(ai));
    multiply_by_binomial_power(rest, i, ai);
  }
  return a;
}

Series prelie_hilbert(const Series& fd, std::size_t order) {
  require_no_constant_term(fd);
  order = std::min(order, fd.order());
  Series t(order);
  // partial = prod over i < n of (1 - x^i)^{-t_i}; factors of degree >= n do
  // not touch degrees below n.
  std::vector<Rational> partial(order + 1);
  partial[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational tn = 0;
    for (std::size_t k = 1; k <= n; ++k) tn += fd[k] * partial[n - k];
    t.set(n, tn);
    multiply_by_binomial_power(partial, n, -tn.get_num());
  }
  if (!t.is_nonnegative_integral()) throw std::logic_error("pre-Lie dimensions must be nonnegative integers");
  return t;
}

Series brace_hilbert(const Series& fd, std::size_t order) {
  require_no_constant_term(fd);
  order = std::min(order, fd.order());
  Series f(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = fd[n];
    for (std::size_t k = 1; k < n; ++k) acc += f[k] * f[n - k];
    f.set(n, acc);
  }
  return f;
}

Series generator_hilbert(const Series& fd, std::size_t order) {
  Series br = brace_hilbert(fd, order);
  Series g = br * euler_product(br);
  if (!g.is_nonnegative_integral()) throw std::logic_error("generator counts must be nonnegative integers");
  return g;
}

Series w_sequence(const Series& fd, std::size_t order) {
  Series br = brace_hilbert(fd, order);
  Series words = (Series::one(br.order()) - br).inverse();
  // For F_D = D x the word series also equals F_Br / (D x).
  bool linear = sgn(fd[1]) != 0;
  for (std::size_t n = 2; n <= br.order() && linear; ++n) linear = sgn(fd[n]) == 0;
  if (linear && !(Series::monomial(br.order(), 1, fd[1]) * words == br))
    throw std::logic_error("word series differs from F_Br / F_D");
  return inv_euler(words);
}

nlohmann::ordered_json to_json(const Series& s) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const nlohmann::json& j) {
  auto order = j.at("order").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (arr.size() != order + 1) throw DomainError("series JSON must carry order + 1 coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : arr) {
    Rational q;
    if (q.set_str(c.get<std::string>(), 10) != 0) throw DomainError("bad coefficient '" + c.get<std::string>() + "'");
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Series(order, std::move(coeffs));
}

}  // namespace bracetree
