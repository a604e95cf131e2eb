#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobrack {

/// A caller broke an operation's precondition: genus too small, generator
/// index outside 1..2g, a word that is not cyclically reduced, and so on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed word text. `position()` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal invariant failed. These indicate a bug or a normalization that
/// is too coarse, never bad user input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cobrack
