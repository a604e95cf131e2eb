#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cobrack/corpus.hpp"
#include "cobrack/error.hpp"
#include "cobrack/surface_group.hpp"
#include "support.hpp"

using namespace cobrack;
using cobrack::testing::C;
using cobrack::testing::W;

namespace {

int brute_force_piece(const std::vector<Word>& rotations) {
  int best = 0;
  for (const Word& a : rotations) {
    for (const Word& b : rotations) {
      if (a == b) continue;
      int n = 0;
      while (n < static_cast<int>(a.size()) && a[n] == b[n]) ++n;
      best = std::max(best, n);
    }
  }
  return best;
}

std::map<int, int> abelianize(const Word& w) {
  std::map<int, int> out;
  for (const Letter a : w) out[a.gen] += a.sign;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Word insert_at(const Word& w, std::size_t pos, const Word& r) {
  Word x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  x.insert(x.end(), r.begin(), r.end());
  x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
  return x;
}

// Some u with |u| <= max_len and u a u^-1 b^-1 = 1 in the group.
bool conjugator_exists(const Presentation& p, const Word& a, const Word& b, int max_len) {
  const int n = p.genus().generators();
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= max_len; ++len) {
    for (const Word& u : layer) {
      Word x = u;
      x.insert(x.end(), a.begin(), a.end());
      const Word ui = inverse(u);
      x.insert(x.end(), ui.begin(), ui.end());
      const Word bi = inverse(b);
      x.insert(x.end(), bi.begin(), bi.end());
      if (p.dehn_reduce(x).empty()) return true;
    }
    std::vector<Word> next;
    for (const Word& u : layer) {
      for (int gen = 1; gen <= n; ++gen) {
        for (int sign : {1, -1}) {
          Word v = u;
          v.push_back(Letter{gen, sign});
          if (is_freely_reduced(v)) next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  return false;
}

}  // namespace

TEST(Presentation, MaxPieceMatchesBruteForce) {
  for (int g = 1; g <= 5; ++g) {
    const auto rotations = symmetrized_rotations(boundary_word(Genus(g)));
    EXPECT_EQ(static_cast<int>(rotations.size()), 8 * g);
    EXPECT_EQ(max_piece_length(rotations), brute_force_piece(rotations)) << "g=" << g;
    EXPECT_EQ(max_piece_length(rotations), 1) << "g=" << g;
  }
}

TEST(Presentation, SmallCancellationBound) {
  EXPECT_THROW(Presentation(Genus(1)), DomainError);
  for (int g = 2; g <= 5; ++g) {
    const Presentation p{Genus(g)};
    EXPECT_EQ(p.max_piece_length(), 1);
    EXPECT_LE(6 * p.max_piece_length(), 4 * g);
    EXPECT_EQ(p.relator(), boundary_word(Genus(g)));
  }
}

TEST(DehnReduce, Examples) {
  for (int g = 2; g <= 4; ++g) {
    const Presentation p{Genus(g)};
    const Word& r = p.relator();
    EXPECT_TRUE(p.dehn_reduce(r).empty());
    const Word head(r.begin(), r.begin() + 2 * g + 1);
    const Word tail(r.begin() + 2 * g + 1, r.end());
    EXPECT_EQ(p.dehn_reduce(head), free_reduce(inverse(tail)));
  }
}

TEST(DehnReduce, ShortWordsUnchanged) {
  const Presentation p{Genus(2)};
  for (const Word& w : enumerate_cyclic_words(Genus(2), 4)) {
    EXPECT_EQ(p.dehn_reduce(w), w);
  }
}

TEST(DehnReduce, ShrinksAndPreservesAbelianization) {
  std::mt19937_64 rng(13);
  for (int g = 2; g <= 4; ++g) {
    const Presentation p{Genus(g)};
    for (int i = 0; i < 300; ++i) {
      Word w = random_cyclically_reduced(Genus(g), 1 + i % 10, rng);
      const auto& r = p.rotations()[rng() % p.rotations().size()];
      w = insert_at(w, rng() % (w.size() + 1), r);
      const Word d = p.dehn_reduce(w);
      EXPECT_LE(d.size(), w.size());
      EXPECT_EQ(abelianize(d), abelianize(w));
      EXPECT_TRUE(is_freely_reduced(d));
    }
  }
}

TEST(DehnReduce, EmptyExactlyForRelatorProducts) {
  std::mt19937_64 rng(17);
  const Presentation p{Genus(2)};
  for (int i = 0; i < 200; ++i) {
    Word w;
    for (int k = 0; k < 1 + i % 3; ++k) {
      w = insert_at(w, rng() % (w.size() + 1), p.rotations()[rng() % p.rotations().size()]);
    }
    EXPECT_TRUE(p.dehn_reduce(w).empty()) << to_string(w);
  }
  EXPECT_FALSE(p.dehn_reduce(W(2, "c1")).empty());
}

TEST(ConjugacyKey, Examples) {
  const Presentation p{Genus(2)};
  EXPECT_EQ(p.conjugacy_key(C(2, "c2- c1 c2")), p.conjugacy_key(C(2, "c1")));
  EXPECT_TRUE(p.conjugacy_key(CyclicWord{}).empty());
  const Word& r = p.relator();
  const Word first(r.begin(), r.begin() + 4);
  const Word second(r.begin() + 4, r.end());
  EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(first)),
            p.conjugacy_key(CyclicWord::from_word(inverse(second))));
}

TEST(ConjugacyKey, TrivialClass) {
  const Presentation p{Genus(2)};
  EXPECT_TRUE(p.is_trivial_class(CyclicWord{}));
  EXPECT_FALSE(p.is_trivial_class(C(2, "c1")));
  EXPECT_TRUE(p.is_trivial_class(CyclicWord::from_word(p.relator())));
  EXPECT_TRUE(p.conjugacy_key(CyclicWord::from_word(p.relator())).empty());
}

// Two length-3 words for g = 2 that are conjugate through a ring of one
// relator; no half-relator move applies to either.
TEST(ConjugacyKey, RingConjugatesShareKey) {
  const Presentation p{Genus(2)};
  const Word a = W(2, "c1 c2- c3");
  const Word b = W(2, "c3 c2- c1");
  ASSERT_NE(CyclicWord::from_word(a), CyclicWord::from_word(b));
  EXPECT_TRUE(conjugator_exists(p, a, b, 1));
  EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(a)), p.conjugacy_key(CyclicWord::from_word(b)));
}

TEST(ConjugacyKey, InvariantUnderRotationConjugationAndRelators) {
  std::mt19937_64 rng(19);
  for (int g = 2; g <= 4; ++g) {
    const Presentation p{Genus(g)};
    for (int i = 0; i < 150; ++i) {
      const Word w = random_cyclically_reduced(Genus(g), 1 + i % 10, rng);
      const CyclicWord key = p.conjugacy_key(CyclicWord::from_word(w));
      EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(rotate(w, rng() % w.size()))), key);

      const Letter x{static_cast<int>(1 + rng() % (2 * g)), rng() % 2 ? 1 : -1};
      Word conj{x};
      conj.insert(conj.end(), w.begin(), w.end());
      conj.push_back(x.inverse());
      EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(conj)), key);

      const Word& r = p.rotations()[rng() % p.rotations().size()];
      const Word inserted = insert_at(w, rng() % (w.size() + 1), r);
      EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(inserted)), key)
          << to_string(w) << " with " << to_string(r);
    }
  }
}

TEST(ConjugacyKey, ShortWordsKeepLiteralKey) {
  for (int g = 2; g <= 3; ++g) {
    const Presentation p{Genus(g)};
    for (const Word& w : enumerate_cyclic_words(Genus(g), 2 * g - 2)) {
      EXPECT_EQ(p.conjugacy_key(CyclicWord::from_word(w)).letters(), w);
    }
  }
}

TEST(ConjugacyKey, ClassLevel) {
  const Presentation p{Genus(2)};
  EXPECT_EQ(p.classify(C(2, "c1 c2 c1 c2")).level, 2);
  EXPECT_EQ(p.classify(C(2, "c1 c1 c1")).level, 3);
  EXPECT_EQ(p.classify(C(2, "c1 c2 c1 c2-")).level, 1);
}

TEST(ConjugacyKey, ClosureCap) {
  const Presentation tight{Genus(2), 1};
  EXPECT_THROW(tight.classify(C(2, "c1 c2- c3")), InvariantError);
}
