#include "cobrack/cyclic_words.hpp"

#include <algorithm>

#include "cobrack/error.hpp"

namespace cobrack {

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (!out.empty() && out.back() == a.inverse()) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

Word cyclically_reduced_representative(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // Booth's failure-function formulation over the doubled sequence.
  auto at = [&](std::size_t i) { return rank(w[i % n]); };
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    long i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      // here i == -1
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

Word rotate(std::span<const Letter> w, std::size_t offset) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(offset + i) % w.size()]);
  return out;
}

Word subword(std::span<const Letter> v, int a, int b) {
  const int m = static_cast<int>(v.size());
  if (m == 0) throw DomainError("subword of an empty word");
  auto wrap = [m](int i) { return ((i - 1) % m + m) % m; };  // 0-based
  const int start = wrap(a);
  const int len = ((wrap(b) - start) % m + m) % m + 1;
  Word out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.push_back(v[static_cast<std::size_t>((start + i) % m)]);
  return out;
}

int repetition_level(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // Prefix function; the smallest period p is n - pi[n-1] when it divides n.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  const std::size_t period = n - pi[n - 1];
  return n % period == 0 ? static_cast<int>(n / period) : 1;
}

CyclicWord CyclicWord::from_word(std::span<const Letter> w) {
  Word r = cyclically_reduced_representative(w);
  return CyclicWord(rotate(r, least_rotation(r)));
}

CyclicWord cyclic_reduce(std::span<const Letter> w) { return CyclicWord::from_word(w); }

CyclicWord inverse(const CyclicWord& w) { return CyclicWord::from_word(inverse(w.letters())); }

CyclicWord power(const CyclicWord& w, int k) {
  if (k < 1) throw DomainError("power exponent must be positive");
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return CyclicWord::from_word(out);
}

int level(const CyclicWord& w) { return repetition_level(w.letters()); }

std::string to_string(Letter a) {
  std::string s = "c" + std::to_string(a.gen);
  if (a.sign < 0) s += '-';
  return s;
}

std::string to_string(std::span<const Letter> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, Letter a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, const CyclicWord& w) {
  return os << '[' << to_string(w.letters()) << ']';
}

}  // namespace cobrack
