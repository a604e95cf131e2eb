#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "cobrack/algebra.hpp"
#include "cobrack/cyclic_words.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack {

/// The twelve ways a new circle segment can cross an earlier radial segment
/// inside the disk around the basepoint.
///
///   1a-1f  step j, segment turning counterclockwise
///   2a-2b  step j, segment turning clockwise
///   3a-3d  closing radius to the basepoint against an earlier segment
enum class CaseLabel { k1a, k1b, k1c, k1d, k1e, k1f, k2a, k2b, k3a, k3b, k3c, k3d };

inline constexpr std::array<CaseLabel, 12> kAllCases = {
    CaseLabel::k1a, CaseLabel::k1b, CaseLabel::k1c, CaseLabel::k1d,
    CaseLabel::k1e, CaseLabel::k1f, CaseLabel::k2a, CaseLabel::k2b,
    CaseLabel::k3a, CaseLabel::k3b, CaseLabel::k3c, CaseLabel::k3d};

std::string_view to_string(CaseLabel label);

/// Q records cut at the outgoing end f_k, QBar records at the ingoing end fbar_k.
enum class Family { Q, QBar };

Family family_of(CaseLabel label);

/// Which k the closing step scans: 2..m-1 or 2..m.
enum class ClosingRange { ThroughMMinus1, ThroughM };

/// Signs and enabled cases. standard() is the table derived from the
/// orientation of the crossing tangents; other tables exist for mutation tests.
struct CaseTable {
  std::array<int, 12> sign{};
  std::array<bool, 12> enabled{};
  ClosingRange closing = ClosingRange::ThroughMMinus1;

  static CaseTable standard();

  int sign_of(CaseLabel c) const { return sign[static_cast<std::size_t>(c)]; }
  bool is_enabled(CaseLabel c) const { return enabled[static_cast<std::size_t>(c)]; }
};

struct IntersectionRecord {
  int j = 0;  // 2..m+1
  int k = 0;  // 1..m
  CaseLabel label = CaseLabel::k1a;
  int sign = 0;
  Family family = Family::Q;

  friend bool operator==(const IntersectionRecord&, const IntersectionRecord&) = default;
};

/// Turning direction of the circle segment at step j (2..m): +1 counterclockwise.
/// The segment takes the shorter way from fbar_{j-1} to f_j, and turns
/// counterclockwise when f_j = f_{j-1}. Throws DomainError for j out of range.
int direction(Genus g, std::span<const Letter> v, int j);

/// Every self-intersection of the disk-model representative of v, sorted by
/// (j, k, label). `v` must be cyclically reduced; empty and single-letter
/// words give no records.
std::vector<IntersectionRecord> intersections(Genus g, std::span<const Letter> v,
                                              const CaseTable& table = CaseTable::standard());

/// One unmerged tensor term, before class normalization.
struct RawTerm {
  Word left;
  Word right;
  int coeff = 0;
  IntersectionRecord source;
};

/// Both signed tensor terms of every record, with factors as literal subwords.
std::vector<RawTerm> raw_terms(Genus g, std::span<const Letter> v,
                               const CaseTable& table = CaseTable::standard());

/// The coproduct of the BV image of the class of v.
/// Throws DomainError if v is not cyclically reduced.
FormalSum coproduct_of_bv(const Normalizer& norm, std::span<const Letter> v,
                          const CaseTable& table = CaseTable::standard());

/// coproduct_of_bv divided by the level of the class. Throws DomainError for
/// the empty word and InvariantError if some coefficient is not divisible.
FormalSum coproduct_on_generator(const Normalizer& norm, std::span<const Letter> v,
                                 const CaseTable& table = CaseTable::standard());

/// Turaev cobracket: the negative of coproduct_of_bv, trivial factors dropped.
FormalSum turaev_cobracket(const Normalizer& norm, std::span<const Letter> v,
                           const CaseTable& table = CaseTable::standard());

}  // namespace cobrack
