#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cobrack/cyclic_words.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack {

/// Seed of case `index` in a run seeded with `base`. Cases are independent,
/// so a randomized suite can run them in any order or in parallel.
std::uint64_t case_seed(std::uint64_t base, std::uint64_t index);

/// Uniformly chosen letters, conditioned on the result being cyclically
/// reduced, of length exactly `length` (>= 1).
Word random_cyclically_reduced(Genus g, int length, std::mt19937_64& rng);

struct RandomCase {
  Genus genus;
  Word word;
};

/// `count` words per genus with lengths uniform in 1..max_len, seeded per case.
std::vector<RandomCase> random_corpus(const std::vector<int>& genera, int count, int max_len,
                                      std::uint64_t seed);

/// Every canonical cyclically reduced word with 1..max_len letters, ordered
/// by length and then lexicographically.
std::vector<Word> enumerate_cyclic_words(Genus g, int max_len);

}  // namespace cobrack
