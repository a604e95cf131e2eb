#include "cobrack/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "cobrack/error.hpp"
#include "cobrack/io.hpp"

namespace cobrack::oracle {
namespace {

Rational mod1(Rational x) {
  const long long n = x.numerator();
  const long long d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return x - q;
}

Rational theta(End e, Genus g) { return Rational(slot(e, g), g.ends()); }

// Strictly inside the swept interval of the arc, endpoints excluded.
bool strictly_swept(const ArcStrand& a, Rational angle) {
  if (a.sweep > 0) {
    const Rational d = mod1(angle - a.start);
    return d > 0 && d < a.sweep;
  }
  const Rational d = mod1(a.start - angle);
  return d > 0 && d < -a.sweep;
}

struct Tangent {
  int x;  // radial component
  int y;  // counterclockwise component
};

Tangent tangent(const Strand& s) {
  if (const auto* r = std::get_if<RadialStrand>(&s.shape)) return {r->outward ? 1 : -1, 0};
  const auto& a = std::get<ArcStrand>(s.shape);
  return {0, a.sweep > 0 ? 1 : -1};
}

std::string describe(const Strand& s, int m) {
  std::ostringstream os;
  if (s.owner == 1) {
    os << "delta_1";
  } else if (s.owner == m + 1) {
    os << "delta_" << m + 1;
  } else {
    os << "mu_" << s.owner;
    if (const auto* r = std::get_if<RadialStrand>(&s.shape)) {
      os << (r->outward ? " (out)" : " (in)");
    } else {
      os << " (arc)";
    }
  }
  return os.str();
}

using RecordKey = std::tuple<int, int, int, int>;  // j, k, family, sign

}  // namespace

Rational Schedule::epsilon(int j, Genus g, int m) const {
  if (kind == Kind::Standard) return Rational(j, 16LL * g.value() * (m + 1));
  return Rational(1LL * j * j, 8LL * g.value() * (1LL * m * m + 1));
}

Rational Schedule::radius(int j, int m) const {
  if (kind == Kind::Standard) return Rational(1, 2) + Rational(j, 2LL * (m + 2));
  return Rational(1) - Rational(1, j + 1);
}

Rational Schedule::inner_radius() const {
  return kind == Kind::Standard ? Rational(1, 2) : Rational(1, 3);
}

CurveModel build_curve(Genus g, std::span<const Letter> v, const Schedule& schedule) {
  require_hyperbolic(g);
  validate_word(v, g);
  if (v.empty()) throw DomainError("the curve of the trivial class is not built");
  if (!is_cyclically_reduced(v)) {
    throw DomainError("word " + to_string(v) + " is not cyclically reduced");
  }
  const int m = static_cast<int>(v.size());
  CurveModel c;
  c.genus = g;
  c.word.assign(v.begin(), v.end());
  c.connector_seq.resize(static_cast<std::size_t>(m));

  std::vector<End> f(static_cast<std::size_t>(m) + 1);
  std::vector<End> fb(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i) {
    const LetterEnds e = ends_of_letter(v[i - 1], g);
    f[i] = e.out;
    fb[i] = e.in;
  }
  auto eps = [&](int j) { return schedule.epsilon(j, g, m); };
  if (!(eps(m) < Rational(1, 8LL * g.value()))) {
    throw InvariantError("epsilon schedule exceeds 1/(8g)");
  }

  int seq = 0;
  auto push = [&](auto shape, int owner) {
    c.strands.push_back(Strand{shape, owner, seq++});
  };

  push(RadialStrand{mod1(theta(f[1], g) + eps(1)), 0, 1, true, {false, 1}}, 1);
  c.connector_seq[0] = seq++;
  for (int j = 2; j <= m; ++j) {
    const Rational r = schedule.radius(j, m);
    const Rational start = mod1(theta(fb[j - 1], g) - eps(j - 1));
    const Rational end = mod1(theta(f[j], g) + eps(j));
    const Rational d = mod1(end - start);
    Rational sweep;
    if (f[j] == f[j - 1]) {
      sweep = d;
    } else if (d == Rational(1, 2)) {
      throw InvariantError("arc of step " + std::to_string(j) + " has no shorter side");
    } else {
      sweep = d < Rational(1, 2) ? d : d - 1;
    }
    push(RadialStrand{start, r, 1, false, {true, j - 1}}, j);
    push(ArcStrand{r, start, sweep}, j);
    push(RadialStrand{end, r, 1, true, {false, j}}, j);
    c.connector_seq[static_cast<std::size_t>(j - 1)] = seq++;
  }
  push(RadialStrand{mod1(theta(fb[m], g) - eps(m)), 0, 1, false, {true, m}}, m + 1);
  return c;
}

std::vector<Crossing> oracle_intersections(const CurveModel& c) {
  const int m = static_cast<int>(c.word.size());
  std::vector<Crossing> out;
  for (std::size_t a = 0; a < c.strands.size(); ++a) {
    const auto* radial = std::get_if<RadialStrand>(&c.strands[a].shape);
    if (radial == nullptr) continue;
    for (std::size_t b = 0; b < c.strands.size(); ++b) {
      const auto* arc = std::get_if<ArcStrand>(&c.strands[b].shape);
      if (arc == nullptr) continue;
      if (!(radial->lo < arc->radius && arc->radius < radial->hi)) continue;
      if (!strictly_swept(*arc, radial->angle)) continue;

      const bool radial_first = c.strands[a].seq < c.strands[b].seq;
      const std::size_t earlier = radial_first ? a : b;
      const std::size_t later = radial_first ? b : a;
      const Tangent u = tangent(c.strands[earlier]);
      const Tangent w = tangent(c.strands[later]);
      const int det = u.x * w.y - u.y * w.x;
      if (det == 0) {
        throw InvariantError("tangential contact between " + describe(c.strands[a], m) +
                             " and " + describe(c.strands[b], m));
      }
      Crossing x;
      x.earlier = earlier;
      x.later = later;
      x.sign = det > 0 ? -1 : +1;
      if (radial_first) {
        x.j = c.strands[b].owner;
        x.k = radial->tag.index;
        x.family = radial->tag.is_bar ? Family::QBar : Family::Q;
      } else {
        x.j = m + 1;
        x.k = c.strands[b].owner;
        x.family = Family::Q;
      }
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
    return std::tie(x.earlier, x.later) < std::tie(y.earlier, y.later);
  });
  return out;
}

FormalSum oracle_coproduct(const Normalizer& norm, const CurveModel& c,
                           std::span<const Crossing> crossings) {
  FormalSum sum(norm);
  const std::size_t m = c.word.size();
  for (const Crossing& x : crossings) {
    const int s = c.strands[x.earlier].seq;
    const int t = c.strands[x.later].seq;
    Word inside;
    Word outside;
    for (std::size_t i = 0; i < m; ++i) {
      const int p = c.connector_seq[i];
      (s < p && p < t ? inside : outside).push_back(c.word[i]);
    }
    insert_pair(sum, inside, outside, x.sign);
    insert_pair(sum, outside, inside, -x.sign);
  }
  return sum;
}

FormalSum oracle_coproduct(const Normalizer& norm, std::span<const Letter> v,
                           const Schedule& schedule) {
  if (v.size() < 2) {
    validate_word(v, norm.genus());
    return FormalSum(norm);
  }
  const CurveModel c = build_curve(norm.genus(), v, schedule);
  const std::vector<Crossing> xs = oracle_intersections(c);
  return oracle_coproduct(norm, c, xs);
}

CompareReport compare(const Normalizer& norm, std::span<const Letter> v, const CaseTable& table,
                      const Schedule& schedule) {
  CompareReport report;
  const FormalSum combinatorial = coproduct_of_bv(norm, v, table);
  const std::vector<IntersectionRecord> records = intersections(norm.genus(), v, table);

  std::vector<Crossing> crossings;
  FormalSum geometric(norm);
  if (!v.empty()) {
    const CurveModel c = build_curve(norm.genus(), v, schedule);
    crossings = oracle_intersections(c);
    geometric = oracle_coproduct(norm, c, crossings);
  }
  report.combinatorial_records = records.size();
  report.geometric_crossings = crossings.size();

  std::ostringstream diff;
  report.sums_equal = combinatorial == geometric;
  if (!report.sums_equal) {
    const FormalSum delta = combinatorial - geometric;
    diff << "combinatorial: " << format_sum_text(combinatorial) << "\n"
         << "oracle:        " << format_sum_text(geometric) << "\n"
         << "difference:    " << format_sum_text(delta) << "\n";
  }

  std::map<RecordKey, int> balance;
  for (const IntersectionRecord& r : records) {
    ++balance[{r.j, r.k, static_cast<int>(r.family), r.sign}];
  }
  for (const Crossing& x : crossings) {
    --balance[{x.j, x.k, static_cast<int>(x.family), x.sign}];
  }
  report.records_match = true;
  for (const auto& [key, n] : balance) {
    if (n == 0) continue;
    report.records_match = false;
    const auto [j, k, fam, sign] = key;
    diff << (n > 0 ? "only combinatorial" : "only oracle") << ": (" << j << "," << k << ") "
         << (fam == static_cast<int>(Family::Q) ? "Q" : "Qbar") << " sign "
         << (sign > 0 ? "+1" : "-1");
    if (std::abs(n) > 1) diff << " x" << std::abs(n);
    diff << "\n";
  }
  report.diff = diff.str();
  return report;
}

std::string curve_svg(const CurveModel& c, std::span<const Crossing> crossings) {
  auto to_double = [](Rational x) {
    return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
  };
  constexpr double kTau = 6.283185307179586;
  auto point = [&](Rational radius, Rational angle) {
    const double r = to_double(radius);
    const double a = kTau * to_double(angle);
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << r * std::cos(a) << " " << -r * std::sin(a);
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n"
     << "<title>" << to_string(c.word) << "</title>\n"
     << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.005\"/>\n"
     << "<g fill=\"none\" stroke=\"#036\" stroke-width=\"0.008\">\n";
  for (const Strand& s : c.strands) {
    os << "<path data-owner=\"" << s.owner << "\" data-seq=\"" << s.seq << "\" d=\"";
    if (const auto* r = std::get_if<RadialStrand>(&s.shape)) {
      const Rational from = r->outward ? r->lo : r->hi;
      const Rational to = r->outward ? r->hi : r->lo;
      os << "M " << point(from, r->angle) << " L " << point(to, r->angle);
    } else {
      const auto& a = std::get<ArcStrand>(s.shape);
      const double radius = to_double(a.radius);
      const bool large = (a.sweep > 0 ? a.sweep : -a.sweep) > Rational(1, 2);
      // y is flipped, so counterclockwise in the disk is sweep-flag 0.
      os << "M " << point(a.radius, a.start) << " A " << radius << " " << radius << " 0 "
         << (large ? 1 : 0) << " " << (a.sweep > 0 ? 0 : 1) << " "
         << point(a.radius, a.start + a.sweep);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g font-size=\"0.06\" fill=\"#c00\">\n";
  for (const Crossing& x : crossings) {
    const Strand& sa = c.strands[x.earlier];
    const Strand& sb = c.strands[x.later];
    const auto* r = std::get_if<RadialStrand>(&sa.shape);
    const auto* a = std::get_if<ArcStrand>(&sb.shape);
    if (r == nullptr) {
      r = std::get_if<RadialStrand>(&sb.shape);
      a = std::get_if<ArcStrand>(&sa.shape);
    }
    const std::string p = point(a->radius, r->angle);
    const std::string cx = p.substr(0, p.find(' '));
    const std::string cy = p.substr(p.find(' ') + 1);
    os << "<circle class=\"crossing\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"0.02\"/>\n"
       << "<text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"0.03\">(" << x.j << "," << x.k
       << ") " << (x.sign > 0 ? "+" : "-") << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace cobrack::oracle
