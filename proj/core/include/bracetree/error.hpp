#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bracetree {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decoration symbol that is not part of the alphabet in use.
class UnknownDecoration : public Error {
 public:
  explicit UnknownDecoration(const std::string& symbol)
      : Error("unknown decoration '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Malformed tree or combination text. `offset` is the byte position in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input outside an operation's domain (nonzero constant term, non-integer exponent, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace bracetree
