#pragma once

#include <initializer_list>
#include <string_view>
#include <utility>

#include "cobrack/algebra.hpp"
#include "cobrack/cyclic_words.hpp"
#include "cobrack/io.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack::testing {

inline Word W(int g, std::string_view text) { return parse_word(text, Genus(g)); }

inline CyclicWord C(int g, std::string_view text) { return CyclicWord::from_word(W(g, text)); }

struct Term {
  std::string_view left;
  std::string_view right;
  int coeff;
};

/// Sum of coeff * [left] x [right], factors normalized by `norm`.
inline FormalSum sum_of(const Normalizer& norm, std::initializer_list<Term> terms) {
  FormalSum s(norm);
  const int g = norm.genus().value();
  for (const Term& t : terms) insert_pair(s, W(g, t.left), W(g, t.right), t.coeff);
  return s;
}

/// (inv x inv) applied to every term.
inline FormalSum invert_factors(const FormalSum& s) {
  FormalSum out(s.normalizer());
  for (const auto& [key, c] : s.terms()) {
    const Word a = inverse(key[0].letters());
    const Word b = inverse(key[1].letters());
    insert_pair(out, a, b, c);
  }
  return out;
}

}  // namespace cobrack::testing
