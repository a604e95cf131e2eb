#include "cobrack/surface_model.hpp"

#include <string>

#include "cobrack/error.hpp"

namespace cobrack {

Genus::Genus(int g) : g_(g) {
  if (g < 1) throw DomainError("genus must be at least 1, got " + std::to_string(g));
}

void require_hyperbolic(Genus g) {
  if (g.value() < 2) {
    throw DomainError("this operation needs genus >= 2, got " + std::to_string(g.value()));
  }
}

void validate_word(std::span<const Letter> w, Genus g) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter a = w[i];
    if (a.gen < 1 || a.gen > g.generators() || (a.sign != 1 && a.sign != -1)) {
      throw DomainError("letter " + std::to_string(i + 1) + " (c" + std::to_string(a.gen) +
                        ") is not a generator of the genus-" + std::to_string(g.value()) +
                        " surface group");
    }
  }
}

int slot(End x, Genus g) {
  return x.polarity == Polarity::Outgoing ? x.gen - 1 : g.generators() + x.gen - 1;
}

bool cyclic_between(int a, int b, int c, int n) {
  if (a == b || b == c || a == c) return false;
  const int db = ((b - a) % n + n) % n;
  const int dc = ((c - a) % n + n) % n;
  return db < dc;
}

bool cyclic_between(End a, End b, End c, Genus g) {
  return cyclic_between(slot(a, g), slot(b, g), slot(c, g), g.ends());
}

LetterEnds ends_of_letter(Letter v, Genus g) {
  validate_word(std::span<const Letter>(&v, 1), g);
  const End f{v.gen, v.sign > 0 ? Polarity::Outgoing : Polarity::Ingoing};
  return LetterEnds{f, bar(f)};
}

Word boundary_word(Genus g) {
  const int n = g.ends();
  const int half = g.generators();
  // Half-edge h in 0..4g-1 is the end at slot h. Leaving through an outgoing
  // end traverses c_i forwards; leaving through an ingoing end traverses it
  // backwards. Either way we arrive at the opposite end of the same edge.
  Word out;
  int h = 0;
  do {
    const bool outgoing = h < half;
    const int gen = (outgoing ? h : h - half) + 1;
    out.push_back(Letter{gen, outgoing ? 1 : -1});
    const int arrival = outgoing ? h + half : h - half;
    h = (arrival + 1) % n;
  } while (h != 0);
  return out;
}

}  // namespace cobrack
