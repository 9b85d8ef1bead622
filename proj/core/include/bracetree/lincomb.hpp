#pragma once

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "bracetree/alphabet.hpp"
#include "bracetree/text.hpp"
#include "bracetree/tree.hpp"

namespace bracetree {

using Rational = mpq_class;

/// Finite formal linear combination of basis elements with exact rational
/// coefficients. No stored coefficient is zero, and terms iterate in the
/// canonical order of the basis, so equal combinations print identically.
template <class Basis>
class LinComb {
 public:
  using Terms = std::map<Basis, Rational>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;
  explicit LinComb(Basis b, const Rational& c = 1) { add_term(std::move(b), c); }

  void add_term(Basis b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sum of the coefficients.
  Rational multiplicity() const {
    Rational total = 0;
    for (const auto& [b, c] : terms_) total += c;
    return total;
  }

  bool has_nonnegative_integer_coefficients() const {
    for (const auto& [b, c] : terms_)
      if (sgn(c) < 0 || c.get_den() != 1) return false;
    return true;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, -c);
    return *this;
  }

  LinComb& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class Basis>
LinComb<Basis> add(const LinComb<Basis>& x, const LinComb<Basis>& y) {
  return x + y;
}

template <class Basis>
LinComb<Basis> scale(const Rational& c, const LinComb<Basis>& x) {
  return c * x;
}

/// Extends f(basis) -> LinComb linearly.
template <class Basis, class F>
auto linear_extend(F f) {
  using Result = std::invoke_result_t<F&, const Basis&>;
  return [f = std::move(f)](const LinComb<Basis>& x) {
    Result out;
    for (const auto& [b, c] : x) out += c * f(b);
    return out;
  };
}

/// Extends f(basis, basis) -> LinComb bilinearly.
template <class Left, class Right, class F>
auto bilinear_extend(F f) {
  using Result = std::invoke_result_t<F&, const Left&, const Right&>;
  return [f = std::move(f)](const LinComb<Left>& x, const LinComb<Right>& y) {
    Result out;
    for (const auto& [bx, cx] : x)
      for (const auto& [by, cy] : y) out += Rational(cx * cy) * f(bx, by);
    return out;
  };
}

/// Applies canonicalize to every term, merging coefficients.
LinComb<RootedTree> flatten(const LinComb<PlanarTree>& x);

/// Text form "c1*t1 + c2*t2 - ...": coefficient 1 prints the bare basis
/// element, fractions print as p/q, and the zero combination prints "0".
template <class Basis>
std::string format(const LinComb<Basis>& x, const DecorationAlphabet& alphabet) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) {
      out += magnitude.get_str();
      out += '*';
    }
    out += serialize(b, alphabet);
  }
  return out;
}

namespace detail {

inline Rational parse_coefficient(Scanner& in) {
  mpz_class num(in.digits());
  mpz_class den = 1;
  if (in.consume('/')) {
    den = mpz_class(in.digits());
    if (den == 0) in.fail("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

template <class Basis>
Basis parse_basis(Scanner& in, const DecorationAlphabet& alphabet) {
  if constexpr (std::is_same_v<Basis, PlanarTree>) {
    return parse_tree(in, alphabet);
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    return canonicalize(parse_tree(in, alphabet));
  } else {
    static_assert(std::is_same_v<Basis, Forest>, "unsupported basis");
    if (in.peek() != '(') in.fail("expected '(' opening a forest");
    return parse_forest(in, alphabet);
  }
}

}  // namespace detail

/// Inverse of format(); accepts arbitrary spacing and optional '*'.
template <class Basis>
LinComb<Basis> parse_lincomb(std::string_view text, const DecorationAlphabet& alphabet) {
  detail::Scanner in(text);
  LinComb<Basis> out;
  {
    detail::Scanner probe(text);
    if (probe.peek() == '0' && sgn(detail::parse_coefficient(probe)) == 0 && probe.at_end()) return out;
  }
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (in.consume('-')) {
      sign = -1;
    } else if (!first) {
      in.expect('+');
    } else {
      in.consume('+');
    }
    first = false;
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      c = detail::parse_coefficient(in);
      in.consume('*');
    }
    out.add_term(detail::parse_basis<Basis>(in, alphabet), sign * c);
    if (in.at_end()) break;
  }
  return out;
}

}  // namespace bracetree
