#include "bracetree/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "bracetree/error.hpp"

namespace bracetree {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

DecorationAlphabet::DecorationAlphabet(std::vector<std::string> symbols, std::vector<unsigned> grades)
    : names_(std::move(symbols)), grades_(std::move(grades)) {
  if (names_.empty()) throw DomainError("decoration alphabet must be nonempty");
  if (grades_.empty()) grades_.assign(names_.size(), 1);
  if (grades_.size() != names_.size())
    throw DomainError("alphabet has " + std::to_string(names_.size()) + " symbols but " +
                      std::to_string(grades_.size()) + " grades");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw DomainError("invalid decoration name '" + names_[i] + "'");
    if (grades_[i] == 0) throw DomainError("decoration '" + names_[i] + "' has degree 0");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw DomainError("duplicate decoration '" + names_[i] + "'");
  }
}

DecorationAlphabet DecorationAlphabet::uniform(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return DecorationAlphabet(std::move(names));
}

Symbol DecorationAlphabet::symbol(std::size_t i) const {
  if (i >= names_.size()) throw DomainError("symbol index out of range");
  return Symbol{static_cast<std::uint32_t>(i)};
}

std::optional<Symbol> DecorationAlphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Symbol{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Symbol DecorationAlphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw UnknownDecoration(std::string(name));
}

std::vector<std::size_t> DecorationAlphabet::degree_counts(std::size_t max_degree) const {
  std::vector<std::size_t> counts(max_degree + 1, 0);
  for (unsigned g : grades_)
    if (g <= max_degree) ++counts[g];
  return counts;
}

}  // namespace bracetree
