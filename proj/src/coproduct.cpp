#include "cobrack/coproduct.hpp"

#include <algorithm>
#include <string>

#include "cobrack/error.hpp"

namespace cobrack {
namespace {

void require_reduced(Genus g, std::span<const Letter> v) {
  require_hyperbolic(g);
  validate_word(v, g);
  if (!is_cyclically_reduced(v)) {
    throw DomainError("word " + to_string(v) + " is not cyclically reduced");
  }
}

// Ends of every letter, 1-based.
struct EndTable {
  std::vector<End> f;
  std::vector<End> fbar;
};

EndTable end_table(Genus g, std::span<const Letter> v) {
  EndTable t;
  t.f.resize(v.size() + 1);
  t.fbar.resize(v.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LetterEnds e = ends_of_letter(v[i], g);
    t.f[i + 1] = e.out;
    t.fbar[i + 1] = e.in;
  }
  return t;
}

int direction_unchecked(Genus g, const EndTable& t, int j) {
  if (t.f[j] == t.f[j - 1]) return +1;
  const int n = g.ends();
  const int d_plus = ((slot(t.f[j], g) - slot(t.fbar[j - 1], g)) % n + n) % n;
  return d_plus < n - d_plus ? +1 : -1;
}

}  // namespace

std::string_view to_string(CaseLabel label) {
  static constexpr std::array<std::string_view, 12> names = {
      "1a", "1b", "1c", "1d", "1e", "1f", "2a", "2b", "3a", "3b", "3c", "3d"};
  return names[static_cast<std::size_t>(label)];
}

Family family_of(CaseLabel label) {
  switch (label) {
    case CaseLabel::k1b:
    case CaseLabel::k1d:
    case CaseLabel::k1f:
    case CaseLabel::k2b:
      return Family::QBar;
    default:
      return Family::Q;
  }
}

CaseTable CaseTable::standard() {
  CaseTable t;
  //          1a  1b  1c  1d  1e  1f  2a  2b  3a  3b  3c  3d
  t.sign = {{-1, +1, -1, +1, -1, +1, +1, -1, -1, +1, -1, +1}};
  t.enabled.fill(true);
  return t;
}

int direction(Genus g, std::span<const Letter> v, int j) {
  require_reduced(g, v);
  const int m = static_cast<int>(v.size());
  if (j < 2 || j > m) {
    throw DomainError("step index " + std::to_string(j) + " outside 2.." + std::to_string(m));
  }
  return direction_unchecked(g, end_table(g, v), j);
}

std::vector<IntersectionRecord> intersections(Genus g, std::span<const Letter> v,
                                              const CaseTable& table) {
  require_reduced(g, v);
  const int m = static_cast<int>(v.size());
  std::vector<IntersectionRecord> out;
  if (m < 2) return out;

  const EndTable t = end_table(g, v);
  const auto& f = t.f;
  const auto& fb = t.fbar;
  std::vector<int> s(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 2; j <= m; ++j) s[j] = direction_unchecked(g, t, j);

  auto between = [g](End a, End b, End c) { return cyclic_between(a, b, c, g); };
  auto emit = [&](int j, int k, CaseLabel c) {
    if (!table.is_enabled(c)) return;
    out.push_back(IntersectionRecord{j, k, c, table.sign_of(c), family_of(c)});
  };
  auto check_exclusive = [&](int hits, int j, int k) {
    if (hits > 1) {
      throw InvariantError("pair (" + std::to_string(j) + "," + std::to_string(k) +
                           ") matches several cases of one family");
    }
  };

  for (int j = 2; j <= m; ++j) {
    for (int k = 1; k < j; ++k) {
      if (s[j] > 0) {
        const bool a = between(fb[j - 1], f[k], f[j]);
        const bool c = f[k] == f[j];
        const bool e = k < j - 1 && f[k] == fb[j - 1];
        check_exclusive(a + c + e, j, k);
        if (a) emit(j, k, CaseLabel::k1a);
        if (c) emit(j, k, CaseLabel::k1c);
        if (e) emit(j, k, CaseLabel::k1e);

        const bool b = between(fb[j - 1], fb[k], f[j]);
        const bool d = fb[k] == f[j];
        const bool ff = k < j - 1 && fb[k] == fb[j - 1];
        check_exclusive(b + d + ff, j, k);
        if (b) emit(j, k, CaseLabel::k1b);
        if (d) emit(j, k, CaseLabel::k1d);
        if (ff) emit(j, k, CaseLabel::k1f);
      } else {
        if (between(f[j], f[k], fb[j - 1])) emit(j, k, CaseLabel::k2a);
        if (between(f[j], fb[k], fb[j - 1])) emit(j, k, CaseLabel::k2b);
      }
    }
  }

  const int last = table.closing == ClosingRange::ThroughM ? m : m - 1;
  for (int k = 2; k <= last; ++k) {
    if (s[k] > 0) {
      if (between(fb[k - 1], fb[m], f[k])) emit(m + 1, k, CaseLabel::k3a);
      if (f[k] == fb[m]) emit(m + 1, k, CaseLabel::k3c);
    } else {
      if (between(f[k], fb[m], fb[k - 1])) emit(m + 1, k, CaseLabel::k3b);
      if (fb[k - 1] == fb[m]) emit(m + 1, k, CaseLabel::k3d);
    }
  }

  std::sort(out.begin(), out.end(), [](const IntersectionRecord& x, const IntersectionRecord& y) {
    if (x.j != y.j) return x.j < y.j;
    if (x.k != y.k) return x.k < y.k;
    return x.label < y.label;
  });
  return out;
}

std::vector<RawTerm> raw_terms(Genus g, std::span<const Letter> v, const CaseTable& table) {
  std::vector<RawTerm> out;
  for (const IntersectionRecord& r : intersections(g, v, table)) {
    Word first;
    Word second;
    if (r.family == Family::Q) {
      first = subword(v, r.k, r.j - 1);
      second = subword(v, r.j, r.k - 1);
    } else {
      first = subword(v, r.k + 1, r.j - 1);
      second = subword(v, r.j, r.k);
    }
    out.push_back(RawTerm{first, second, r.sign, r});
    out.push_back(RawTerm{std::move(second), std::move(first), -r.sign, r});
  }
  return out;
}

FormalSum coproduct_of_bv(const Normalizer& norm, std::span<const Letter> v,
                          const CaseTable& table) {
  FormalSum sum(norm);
  for (const RawTerm& t : raw_terms(norm.genus(), v, table)) {
    insert_pair(sum, t.left, t.right, t.coeff);
  }
  return sum;
}

FormalSum coproduct_on_generator(const Normalizer& norm, std::span<const Letter> v,
                                 const CaseTable& table) {
  if (v.empty()) throw DomainError("the trivial class has no generator coproduct");
  const FormalSum sum = coproduct_of_bv(norm, v, table);
  return sum.divided_exactly(norm.level(v));
}

FormalSum turaev_cobracket(const Normalizer& norm, std::span<const Letter> v,
                           const CaseTable& table) {
  return -coproduct_of_bv(norm, v, table);
}

}  // namespace cobrack
