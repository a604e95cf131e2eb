#include "cobrack/surface_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cobrack/error.hpp"

namespace cobrack {
namespace {

// Representatives this many letters longer than the shortest one are still
// explored, so that (2g-1)-prefix moves can be chained around a ring.
constexpr std::size_t kSearchSlack = 2;

std::size_t common_prefix(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return n;
}

// Length of the common prefix of the cyclic sequence s read from offset p and
// the word r, capped at |s|.
std::size_t cyclic_common_prefix(const Word& s, std::size_t p, const Word& r) {
  const std::size_t n = s.size();
  std::size_t len = 0;
  while (len < n && len < r.size() && s[(p + len) % n] == r[len]) ++len;
  return len;
}

// inverse(r[k..]) followed by the letters of s after the matched block.
Word splice(const Word& s, std::size_t p, std::size_t k, const Word& r) {
  Word t = inverse(std::span<const Letter>(r).subspan(k));
  const std::size_t n = s.size();
  for (std::size_t i = k; i < n; ++i) t.push_back(s[(p + i) % n]);
  return t;
}

}  // namespace

std::vector<Word> symmetrized_rotations(std::span<const Letter> relator) {
  std::vector<Word> out;
  const Word inv = inverse(relator);
  for (std::size_t i = 0; i < relator.size(); ++i) out.push_back(rotate(relator, i));
  for (std::size_t i = 0; i < inv.size(); ++i) out.push_back(rotate(inv, i));
  return out;
}

int max_piece_length(std::span<const Word> rotation_set) {
  std::vector<Word> sorted(rotation_set.begin(), rotation_set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // The longest common prefix over all pairs is attained by neighbours in
  // sorted order.
  std::size_t best = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    best = std::max(best, common_prefix(sorted[i - 1], sorted[i]));
  }
  return static_cast<int>(best);
}

Presentation::Presentation(Genus g, std::size_t closure_cap)
    : genus_(g),
      closure_cap_(closure_cap),
      relator_(boundary_word(g)),
      rotations_(symmetrized_rotations(relator_)),
      max_piece_(cobrack::max_piece_length(rotations_)) {
  if (max_piece_ > g.ends() / 6) {
    throw DomainError("relator of genus " + std::to_string(g.value()) +
                      " has a piece of length " + std::to_string(max_piece_) +
                      ", violating C'(1/6)");
  }
}

Word Presentation::dehn_reduce(std::span<const Letter> input) const {
  const std::size_t half = static_cast<std::size_t>(genus_.generators());
  Word w = free_reduce(input);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      const auto tail = std::span<const Letter>(w).subspan(i);
      for (const Word& r : rotations_) {
        const std::size_t len = common_prefix(tail, r);
        if (len <= half) continue;
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        const Word repl = inverse(std::span<const Letter>(r).subspan(len));
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
        w = free_reduce(next);
        changed = true;
        break;
      }
    }
  }
  return w;
}

CyclicWord Presentation::cyclic_dehn_reduce(std::span<const Letter> input) const {
  const std::size_t half = static_cast<std::size_t>(genus_.generators());
  Word s = cyclically_reduced_representative(input);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < s.size() && !changed; ++p) {
      for (const Word& r : rotations_) {
        const std::size_t len = cyclic_common_prefix(s, p, r);
        if (len <= half) continue;
        s = cyclically_reduced_representative(splice(s, p, len, r));
        changed = true;
        break;
      }
    }
  }
  return CyclicWord::from_word(s);
}

void Presentation::neighbours(const Word& s, std::vector<Word>& out) const {
  const std::size_t min_len = static_cast<std::size_t>(genus_.generators() - 1);
  for (std::size_t p = 0; p < s.size(); ++p) {
    for (const Word& r : rotations_) {
      const std::size_t len = cyclic_common_prefix(s, p, r);
      for (std::size_t k = std::max<std::size_t>(min_len, 1); k <= len; ++k) {
        out.push_back(CyclicWord::from_word(splice(s, p, k, r)).letters());
      }
    }
  }
}

ClassInfo Presentation::classify(const CyclicWord& w) const {
  Word start = cyclic_dehn_reduce(w.letters()).letters();
  for (;;) {
    const std::size_t best = start.size();
    if (best == 0) return ClassInfo{CyclicWord{}, 0, 1};

    std::set<Word> seen{start};
    std::deque<Word> frontier{start};
    std::vector<Word> next;
    bool restarted = false;
    while (!frontier.empty() && !restarted) {
      const Word s = std::move(frontier.front());
      frontier.pop_front();
      next.clear();
      neighbours(s, next);
      for (Word& t : next) {
        if (t.size() < best) {
          start = cyclic_dehn_reduce(t).letters();
          restarted = true;
          break;
        }
        if (t.size() > best + kSearchSlack) continue;
        if (seen.insert(t).second) {
          if (seen.size() > closure_cap_) {
            throw InvariantError("conjugacy closure of " + to_string(w.letters()) +
                                 " exceeded " + std::to_string(closure_cap_) + " elements");
          }
          frontier.push_back(std::move(t));
        }
      }
    }
    if (restarted) continue;

    ClassInfo info;
    info.closure_size = seen.size();
    bool first = true;
    for (const Word& s : seen) {
      if (s.size() != best) continue;
      if (first) {
        // std::set iterates in increasing order, so the first shortest
        // element is the least one.
        info.key = CyclicWord::from_word(s);
        first = false;
      }
      info.level = std::max(info.level, repetition_level(s));
    }
    return info;
  }
}

bool Presentation::is_trivial_class(const CyclicWord& w) const {
  return dehn_reduce(w.letters()).empty();
}

}  // namespace cobrack
