#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cobrack/cyclic_words.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack {

/// All cyclic rotations of a relator and of its inverse.
std::vector<Word> symmetrized_rotations(std::span<const Letter> relator);

/// Longest piece: the longest common prefix of two distinct elements of a
/// symmetrized rotation set.
int max_piece_length(std::span<const Word> rotation_set);

/// Result of classifying a cyclic word in the surface group.
struct ClassInfo {
  /// Least canonical rotation among the shortest representatives found.
  CyclicWord key;
  /// Largest repetition level among those representatives.
  int level = 0;
  /// Number of cyclic words visited in the final search round.
  std::size_t closure_size = 0;
};

/// The one-relator presentation <c_1, ..., c_2g | R_g> of the surface group,
/// with R_g traced by boundary_word(). Immutable after construction.
class Presentation {
 public:
  static constexpr std::size_t kDefaultClosureCap = 10000;

  /// Throws DomainError if the relator fails C'(1/6), which rejects g = 1.
  explicit Presentation(Genus g, std::size_t closure_cap = kDefaultClosureCap);

  Genus genus() const noexcept { return genus_; }
  const Word& relator() const noexcept { return relator_; }
  const std::vector<Word>& rotations() const noexcept { return rotations_; }
  int max_piece_length() const noexcept { return max_piece_; }

  /// Dehn's algorithm on a linear word: free reduction, then repeated
  /// replacement of any subword longer than half a relator by the inverse of
  /// the rest of that relator. Empty iff `w` is trivial in the group.
  Word dehn_reduce(std::span<const Letter> w) const;

  /// Dehn's algorithm applied to cyclic subwords, until no cyclic subword is
  /// longer than half a relator.
  CyclicWord cyclic_dehn_reduce(std::span<const Letter> w) const;

  /// Searches the shortest cyclic representatives of the conjugacy class.
  ///
  /// Moves replace a cyclic subword of length >= 2g-1 that is a prefix of a
  /// relator rotation by the inverse of the remaining letters. Exact halves
  /// keep the length, longer prefixes shorten it, and (2g-1)-prefixes lengthen
  /// it by two; the last kind is followed within a slack of two letters, which
  /// reaches representatives that differ by a ring of relators around the
  /// annulus. Finding a shorter word restarts the search from it.
  /// Throws InvariantError when the visited set exceeds the closure cap.
  ClassInfo classify(const CyclicWord& w) const;

  CyclicWord conjugacy_key(const CyclicWord& w) const { return classify(w).key; }

  bool is_trivial_class(const CyclicWord& w) const;

 private:
  // Replacement moves on a cyclic sequence; appends canonical results.
  void neighbours(const Word& s, std::vector<Word>& out) const;

  Genus genus_;
  std::size_t closure_cap_;
  Word relator_;
  std::vector<Word> rotations_;
  int max_piece_;
};

}  // namespace cobrack
