#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cobrack {

/// One of c_1, ..., c_2g or its inverse.
///
/// Letters are totally ordered by generator index, and for equal index the
/// positive letter comes first. Canonical rotations of cyclic words are taken
/// with respect to this order.
struct Letter {
  int gen = 1;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return Letter{gen, -sign}; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// Dense index of a letter in the order above: c1 -> 0, c1^-1 -> 1, c2 -> 2, ...
constexpr int rank(Letter a) { return 2 * (a.gen - 1) + (a.sign > 0 ? 0 : 1); }

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(std::span<const Letter> w);

bool is_freely_reduced(std::span<const Letter> w);

/// No adjacent inverse pair, including the pair (last, first).
bool is_cyclically_reduced(std::span<const Letter> w);

/// Freely reduces and then strips matching inverse letters from both ends.
/// The result keeps the input's rotation, so letter positions stay meaningful
/// to the caller.
Word cyclically_reduced_representative(std::span<const Letter> w);

/// Offset of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> w);

Word rotate(std::span<const Letter> w, std::size_t offset);

/// Cyclic subword v_a ... v_b of a representative v_1 ... v_m (1-based).
///
/// Indices are read modulo m, so m + 1 names v_1 and 0 names v_m. Walking is
/// always forward; the result has ((b - a) mod m) + 1 letters and is never
/// empty. Throws DomainError when v is empty.
Word subword(std::span<const Letter> v, int a, int b);

/// Multiplicity of the letter sequence as a cyclic repetition: the largest l
/// such that w is an l-fold repetition of one block. 0 for the empty sequence.
int repetition_level(std::span<const Letter> w);

/// A conjugacy class of the free group on the generators.
///
/// Stored as its cyclically reduced, lexicographically least rotation. The
/// default value is the trivial class.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Cyclically reduces `w` and picks the canonical rotation.
  static CyclicWord from_word(std::span<const Letter> w);

  const Word& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  explicit CyclicWord(Word canonical) : letters_(std::move(canonical)) {}

  Word letters_;
};

CyclicWord cyclic_reduce(std::span<const Letter> w);
CyclicWord inverse(const CyclicWord& w);

/// k-fold concatenation, canonicalized. Throws DomainError for k < 1.
CyclicWord power(const CyclicWord& w, int k);

/// Level of a free-group class: repetition multiplicity of its letters.
int level(const CyclicWord& w);

std::string to_string(Letter a);

/// Space-separated letters in input syntax, e.g. "c4 c6 c3 c1- c5- c4".
std::string to_string(std::span<const Letter> w);
inline std::string to_string(const CyclicWord& w) { return to_string(w.letters()); }

std::ostream& operator<<(std::ostream& os, Letter a);
std::ostream& operator<<(std::ostream& os, const CyclicWord& w);

}  // namespace cobrack
