#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cobrack/algebra.hpp"
#include "cobrack/cyclic_words.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack {

/// Parses whitespace-separated tokens "c<index>", each optionally followed by
/// "-" or "^-1", e.g. "c4 c6 c3 c1- c5^-1 c4". Throws ParseError with the
/// byte offset of the offending token, including for indices outside 1..2g.
Word parse_word(std::string_view text, Genus g);

struct DocumentTerm {
  Word left;
  Word right;
  Coefficient coeff;

  friend bool operator==(const DocumentTerm&, const DocumentTerm&) = default;
};

/// One computed result in the form the CLI emits it.
struct ResultDocument {
  int genus = 2;
  Word raw;    // as typed
  Word word;   // cyclically reduced input the engines ran on
  std::string mode;
  int level = 0;
  std::vector<DocumentTerm> terms;  // in FormalSum order
  std::string engine = "combinatorial";

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

ResultDocument make_document(const Normalizer& norm, std::span<const Letter> raw,
                             std::span<const Letter> word, int level, const FormalSum& sum,
                             std::string engine = "combinatorial");

/// Single-line JSON with a fixed key order. Coefficients beyond the 64-bit
/// range are written as decimal strings.
std::string to_json(const ResultDocument& doc);
/// Inverse of to_json. Throws ParseError on malformed input.
ResultDocument document_from_json(std::string_view text);

/// "0" for the zero sum, otherwise signed terms like "- [c1- c3] x [c4 c4 c6 c5-]".
std::string format_sum_text(const FormalSum& sum);
std::string to_text(const ResultDocument& doc);

/// Bracket notation, e.g. "-[c_{1}^{-1} c_{3}]\times[c_{4} c_{4} c_{6} c_{5}^{-1}]".
std::string to_latex(std::span<const Letter> w);
std::string to_latex(const ResultDocument& doc);

}  // namespace cobrack
