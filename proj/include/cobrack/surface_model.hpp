#pragma once

#include <span>

#include "cobrack/cyclic_words.hpp"

namespace cobrack {

/// Genus of the closed oriented surface. Values below 1 are rejected here;
/// operations that need a hyperbolic surface call require_hyperbolic().
class Genus {
 public:
  explicit Genus(int g);

  int value() const noexcept { return g_; }
  int generators() const noexcept { return 2 * g_; }
  /// Number of ends on the boundary circle of the disk around the basepoint.
  int ends() const noexcept { return 4 * g_; }

  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

/// Throws DomainError unless g >= 2.
void require_hyperbolic(Genus g);

/// Throws DomainError if some letter's generator lies outside 1..2g.
void validate_word(std::span<const Letter> w, Genus g);

enum class Polarity { Outgoing, Ingoing };

/// One of the 4g points where a generator loop meets the boundary of the
/// disk around the basepoint: e_i (outgoing) or e'_i (ingoing).
struct End {
  int gen = 1;
  Polarity polarity = Polarity::Outgoing;

  friend bool operator==(End, End) = default;
};

constexpr End bar(End x) {
  return End{x.gen, x.polarity == Polarity::Outgoing ? Polarity::Ingoing : Polarity::Outgoing};
}

/// Angular position in Z/4g: e_i sits at i-1 and e'_i at 2g+i-1. The angle of
/// the end is slot / 4g of a full turn.
int slot(End x, Genus g);

/// Strict cyclic betweenness on Z/n: walking positively from a, one meets b
/// strictly before c. False unless a, b, c are pairwise distinct.
bool cyclic_between(int a, int b, int c, int n);
bool cyclic_between(End a, End b, End c, Genus g);

/// The pair (f, fbar) of a letter: c_i leaves through e_i and comes back
/// through e'_i; an inverse letter runs the other way.
struct LetterEnds {
  End out;
  End in;
};
LetterEnds ends_of_letter(Letter v, Genus g);

/// The relator of the surface: the word read off the single boundary face of
/// the one-vertex ribbon graph whose rotation is 1 < 2 < ... < 2g < 1' < ... < 2g'.
/// Tracing starts at half-edge 1, traverses the edge, and continues from the
/// cyclic successor of the arrival half-edge. Accepts g = 1.
Word boundary_word(Genus g);

}  // namespace cobrack
