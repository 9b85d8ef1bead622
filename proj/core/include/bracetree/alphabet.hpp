#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bracetree {

/// Index of a decoration inside its alphabet. Ordering follows alphabet order.
struct Symbol {
  std::uint32_t index = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Finite, totally ordered, graded set of decorations.
///
/// Every symbol carries a positive degree; a vertex decorated by `d`
/// contributes `grade(d)` to the weight of its tree.
class DecorationAlphabet {
 public:
  /// Throws DomainError on duplicate or malformed names, zero grades, or a
  /// grade list whose length differs from the symbol list. An empty grade
  /// list means every grade is 1.
  explicit DecorationAlphabet(std::vector<std::string> symbols, std::vector<unsigned> grades = {});

  /// Symbols x1, ..., xD, all of grade 1.
  static DecorationAlphabet uniform(std::size_t count);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<unsigned>& grades() const noexcept { return grades_; }

  const std::string& name(Symbol s) const { return names_.at(s.index); }
  unsigned grade(Symbol s) const { return grades_.at(s.index); }
  Symbol symbol(std::size_t i) const;

  std::optional<Symbol> find(std::string_view name) const;
  /// Throws UnknownDecoration.
  Symbol at(std::string_view name) const;

  /// d_n for n = 0..max_degree: number of symbols of degree n (d_0 is always 0).
  std::vector<std::size_t> degree_counts(std::size_t max_degree) const;

  bool operator==(const DecorationAlphabet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> grades_;
};

/// True when `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

}  // namespace bracetree
