#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "cobrack/algebra.hpp"
#include "cobrack/coproduct.hpp"
#include "cobrack/cyclic_words.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack::oracle {

/// Exact angles (in turns) and radii.
using Rational = boost::rational<long long>;

/// Offsets and radii of the disk-model curve. Any schedule with
/// 0 < eps_1 < ... < eps_m < 1/(8g) and R1 < r_2 < ... < r_m < 1 draws the
/// same curve up to isotopy, so both must give the same answers.
struct Schedule {
  enum class Kind { Standard, Alternate };
  Kind kind = Kind::Standard;

  static Schedule standard() { return {Kind::Standard}; }
  static Schedule alternate() { return {Kind::Alternate}; }

  Rational epsilon(int j, Genus g, int m) const;
  Rational radius(int j, int m) const;
  Rational inner_radius() const;
};

/// Where a radial segment leaves the disk, as seen by the case analysis:
/// the end f_index (outgoing side) or fbar_index (ingoing side).
struct EndTag {
  bool is_bar = false;
  int index = 0;
};

struct RadialStrand {
  Rational angle;
  Rational lo;
  Rational hi;
  bool outward = true;
  EndTag tag;
};

struct ArcStrand {
  Rational radius;
  Rational start;
  Rational sweep;  // positive is counterclockwise, 0 < |sweep| < 1
};

struct Strand {
  std::variant<RadialStrand, ArcStrand> shape;
  int owner = 0;   // 1 for delta_1, j for mu_j, m+1 for the closing radius
  int seq = 0;     // position along the loop
};

struct CurveModel {
  Genus genus{2};
  Word word;
  std::vector<Strand> strands;
  /// connector_seq[i] is the loop position of the connector of letter i+1.
  std::vector<int> connector_seq;
};

/// Builds the curve for a cyclically reduced word with m >= 1.
CurveModel build_curve(Genus g, std::span<const Letter> v,
                       const Schedule& schedule = Schedule::standard());

struct Crossing {
  std::size_t earlier = 0;  // index into CurveModel::strands
  std::size_t later = 0;
  int sign = 0;
  /// The (j, k) pair and family this crossing corresponds to in the
  /// combinatorial description, read off the strand owners and tags.
  int j = 0;
  int k = 0;
  Family family = Family::Q;
};

/// All transversal self-intersections, sorted by (earlier, later).
/// Throws InvariantError for a tangential contact.
std::vector<Crossing> oracle_intersections(const CurveModel& c);

/// Cuts the curve at every crossing and sums the signed tensor terms.
FormalSum oracle_coproduct(const Normalizer& norm, const CurveModel& c,
                           std::span<const Crossing> crossings);
FormalSum oracle_coproduct(const Normalizer& norm, std::span<const Letter> v,
                           const Schedule& schedule = Schedule::standard());

struct CompareReport {
  bool sums_equal = false;
  bool records_match = false;
  std::size_t combinatorial_records = 0;
  std::size_t geometric_crossings = 0;
  std::string diff;

  bool ok() const { return sums_equal && records_match; }
};

/// Runs both engines on v and compares the sums and the record sets.
CompareReport compare(const Normalizer& norm, std::span<const Letter> v,
                      const CaseTable& table = CaseTable::standard(),
                      const Schedule& schedule = Schedule::standard());

/// SVG drawing of the curve in the unit disk with crossings as labelled dots
/// (one circle element with class "crossing" per crossing).
std::string curve_svg(const CurveModel& c, std::span<const Crossing> crossings);

}  // namespace cobrack::oracle
