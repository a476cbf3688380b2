#include "tubes/intersections.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tubes/error.hpp"

namespace tubes {

namespace {

void require_rank(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta) {
  if (alpha.n() != n || beta.n() != n) {
    throw TubeError(ErrorKind::RankMismatch, "arcs " + alpha.str() + " and " + beta.str() +
                                                 " are not both in A(" + std::to_string(n) + ")");
  }
}

// #{x : x = base (mod n), lo < x < hi}
std::int64_t count_congruent_open(std::int64_t base, std::int64_t n, std::int64_t lo, std::int64_t hi) {
  if (hi - lo < 2) return 0;
  return floor_div(hi - 1 - base, n) - floor_div(lo - base, n);
}

// gamma is the shorter arc; ties go to the smaller start point.
bool realize_beta_as_gamma(const ArcAnn& alpha, const ArcAnn& beta) {
  if (alpha.len() != beta.len()) return beta.len() < alpha.len();
  return beta.a() < alpha.a();
}

}  // namespace

std::int64_t ipos_lifts(std::int64_t n, const ArcU& alpha, const ArcU& beta) {
  if (beta.length() < alpha.length()) return ineg_lifts(n, beta, alpha);
  return count_congruent_open(beta.a(), n, alpha.a(), alpha.b());
}

std::int64_t ineg_lifts(std::int64_t n, const ArcU& alpha, const ArcU& beta) {
  if (beta.length() < alpha.length()) return ipos_lifts(n, beta, alpha);
  return count_congruent_open(beta.b(), n, alpha.a(), alpha.b());
}

std::int64_t ipos(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta) {
  require_rank(n, alpha, beta);
  return ipos_lifts(n, canonical_lift(alpha), canonical_lift(beta));
}

std::int64_t ineg(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta) {
  require_rank(n, alpha, beta);
  return ineg_lifts(n, canonical_lift(alpha), canonical_lift(beta));
}

CrossingReport itotal(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta) {
  CrossingReport report;
  report.pos = ipos(n, alpha, beta);
  report.neg = ineg(n, alpha, beta);
  report.total = report.pos + report.neg;
  return report;
}

PLRealization pl_realization(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta, const Rational& h) {
  require_rank(n, alpha, beta);
  if (beta.len() < alpha.len()) {
    throw TubeError(ErrorKind::InvalidArgument, "pl_realization needs len(beta) >= len(alpha), got " +
                                                    alpha.str() + ", " + beta.str());
  }
  if (h <= 0 || h >= 1) throw TubeError(ErrorKind::InvalidArgument, "apex height must lie in (0,1)");

  const std::int64_t c = beta.a();
  const std::int64_t d = c + beta.len();
  const std::int64_t a = alpha.a() < c ? alpha.a() + n : alpha.a();
  const std::int64_t b = a + alpha.len();

  const Point delta_apex{Rational(c + d, 2), h};
  PLArc delta{{Point{c, 0}, delta_apex, Point{d, 0}}};

  // Rising ray from (a,0) towards the midpoint of the tops of delta, sigma(delta).
  const Point target1{Rational(c + d + n, 2), h};
  // Right end y of the last translate of delta with y < b.
  const std::int64_t y = d + floor_div(b - 1 - d, n) * n;
  const Point target2{Rational(2 * y + c - d + n, 2), h};

  // Solve (a,0) + s (target1 - (a,0)) = (b,0) + t (target2 - (b,0)). Both
  // rays reach height h at s = t = 1, so equal heights force s = t.
  const Rational run1 = target1.x - Rational(a);
  const Rational run2 = target2.x - Rational(b);
  if (run1 == run2) throw std::logic_error("parallel rays in pl_realization");
  const Rational s = Rational(b - a) / (run1 - run2);
  const Point apex{Rational(a) + run1 * s, h * s};

  PLArc gamma{{Point{a, 0}, apex, Point{b, 0}}};
  return PLRealization{std::move(gamma), std::move(delta), ArcU(a, b), ArcU(c, d), apex};
}

CrossingReport cover_count(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta, bool with_points,
                           SignConvention convention) {
  require_rank(n, alpha, beta);
  const bool swapped = realize_beta_as_gamma(alpha, beta);
  const ArcAnn& shorter = swapped ? beta : alpha;
  const ArcAnn& longer = swapped ? alpha : beta;
  const PLRealization pl = pl_realization(n, shorter, longer, Rational(1, 2));

  const Rational gmin = pl.gamma.min_x();
  const Rational gmax = pl.gamma.max_x();
  const std::int64_t c = pl.delta_lift.a();
  const std::int64_t d = pl.delta_lift.b();
  // Translates with [c + m n, d + m n] meeting [gmin, gmax].
  const std::int64_t m_lo = floor_div(floor_div(gmin.num(), gmin.den()) - d, n);
  const std::int64_t m_hi = floor_div(-floor_div(-gmax.num(), gmax.den()) - c, n) + 1;

  const auto gamma_segments = pl.gamma.segments();
  std::vector<CrossingRecord> records;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const PLArc delta_m = pl.delta.translated(Rational(m * n));
    std::vector<CrossingRecord> found;
    for (const Segment& g : gamma_segments) {
      for (const Segment& e : delta_m.segments()) {
        const SegmentHit hit = intersect(g, e);
        if (hit.relation == SegmentRelation::Disjoint) continue;
        if (hit.relation == SegmentRelation::Overlapping) {
          throw std::logic_error("overlapping representatives for " + alpha.str() + ", " + beta.str());
        }
        // Marked points on the boundary are not crossings.
        if (hit.point.y <= 0 || hit.point.y >= 1) continue;
        if (hit.at_endpoint) {
          throw std::logic_error("crossing through a corner for " + alpha.str() + ", " + beta.str());
        }
        int sign = cross(g.direction(), e.direction()).sign();
        if (swapped) sign = -sign;
        if (convention == SignConvention::Flipped) sign = -sign;
        found.push_back({hit.point.x, hit.point.y, sign, m});
      }
    }
    records.insert(records.end(), found.begin(), found.end());
  }

  std::sort(records.begin(), records.end(), [](const CrossingRecord& p, const CrossingRecord& q) {
    return Point{p.x, p.y} < Point{q.x, q.y};
  });

  CrossingReport report;
  for (const auto& r : records) (r.sign > 0 ? report.pos : report.neg) += 1;
  report.total = report.pos + report.neg;
  if (with_points) report.points = std::move(records);
  return report;
}

std::int64_t strip_ipos(const ArcU& alpha, const ArcU& beta) {
  if (beta.length() < alpha.length()) return strip_ineg(beta, alpha);
  return (alpha.a() < beta.a() && beta.a() < alpha.b()) ? 1 : 0;
}

std::int64_t strip_ineg(const ArcU& alpha, const ArcU& beta) {
  if (beta.length() < alpha.length()) return strip_ipos(beta, alpha);
  return (alpha.a() < beta.b() && beta.b() < alpha.b()) ? 1 : 0;
}

CrossingReport strip_total(const ArcU& alpha, const ArcU& beta) {
  CrossingReport report;
  report.pos = strip_ipos(alpha, beta);
  report.neg = strip_ineg(alpha, beta);
  report.total = report.pos + report.neg;
  return report;
}

CrossingReport strip_cover_count(const ArcU& alpha, const ArcU& beta) {
  const std::int64_t bound = std::max({std::abs(alpha.a()), std::abs(alpha.b()), std::abs(beta.a()),
                                       std::abs(beta.b())});
  const std::int64_t n = 2 * bound + 3;
  return cover_count(n, project(alpha, n), project(beta, n));
}

DoubledArcPair double_arc(const ArcAnn& arc) {
  const ArcU lift = canonical_lift(arc);
  const std::int64_t n = arc.n();
  return {project(lift, 2 * n), project(shift(lift, ShiftPower{1}, n), 2 * n)};
}

CrossingReport doubled_intersections(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta) {
  require_rank(n, alpha, beta);
  const DoubledArcPair da = double_arc(alpha);
  const DoubledArcPair db = double_arc(beta);
  CrossingReport sum;
  for (const ArcAnn& x : {da.first, da.second}) {
    for (const ArcAnn& y : {db.first, db.second}) {
      const CrossingReport r = itotal(2 * n, x, y);
      sum.pos += r.pos;
      sum.neg += r.neg;
    }
  }
  sum.total = sum.pos + sum.neg;
  return sum;
}

}  // namespace tubes
