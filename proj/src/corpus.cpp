#include "cobrack/corpus.hpp"

#include "cobrack/error.hpp"

namespace cobrack {

std::uint64_t case_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined state
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Word random_cyclically_reduced(Genus g, int length, std::mt19937_64& rng) {
  if (length < 1) throw DomainError("random word length must be positive");
  std::uniform_int_distribution<int> pick(0, 2 * g.generators() - 1);
  auto letter = [&] {
    const int r = pick(rng);
    return Letter{r / 2 + 1, r % 2 == 0 ? 1 : -1};
  };
  for (;;) {
    Word w;
    w.reserve(static_cast<std::size_t>(length));
    while (static_cast<int>(w.size()) < length) {
      const Letter a = letter();
      if (!w.empty() && a == w.back().inverse()) continue;
      w.push_back(a);
    }
    if (is_cyclically_reduced(w)) return w;
  }
}

std::vector<RandomCase> random_corpus(const std::vector<int>& genera, int count, int max_len,
                                      std::uint64_t seed) {
  if (max_len < 1) throw DomainError("max length must be positive");
  std::vector<RandomCase> out;
  std::uint64_t index = 0;
  for (int gv : genera) {
    const Genus g(gv);
    for (int i = 0; i < count; ++i) {
      std::mt19937_64 rng(case_seed(seed, index++));
      const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
      out.push_back(RandomCase{g, random_cyclically_reduced(g, len, rng)});
    }
  }
  return out;
}

namespace {

void extend(const std::vector<Letter>& alphabet, int target, Word& w, std::vector<Word>& out) {
  if (static_cast<int>(w.size()) == target) {
    if (is_cyclically_reduced(w) && least_rotation(w) == 0) out.push_back(w);
    return;
  }
  for (const Letter a : alphabet) {
    if (!w.empty() && a == w.back().inverse()) continue;
    // A canonical rotation never starts with a letter larger than any later one.
    if (!w.empty() && a < w.front()) continue;
    w.push_back(a);
    extend(alphabet, target, w, out);
    w.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_cyclic_words(Genus g, int max_len) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= g.generators(); ++i) {
    alphabet.push_back(Letter{i, 1});
    alphabet.push_back(Letter{i, -1});
  }
  std::vector<Word> out;
  Word w;
  for (int len = 1; len <= max_len; ++len) extend(alphabet, len, w, out);
  return out;
}

}  // namespace cobrack
