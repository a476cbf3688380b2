#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tubes/arcs.hpp"
#include "tubes/geometry.hpp"

namespace tubes {

struct CrossingRecord {
  Rational x;
  Rational y;
  int sign = 0;            // +1 positive, -1 negative
  std::int64_t shift_m = 0;  // which sigma-translate of delta was crossed

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

/// Positive, negative and total minimal crossing numbers of two oriented arcs.
struct CrossingReport {
  std::int64_t pos = 0;
  std::int64_t neg = 0;
  std::int64_t total = 0;
  std::optional<std::vector<CrossingRecord>> points;

  bool same_numbers(const CrossingReport& other) const {
    return pos == other.pos && neg == other.neg && total == other.total;
  }
};

// Closed forms. When len(beta) >= len(alpha):
//   ipos = #{m : a < c + m n < b},   ineg = #{m : a < d + m n < b}
// for lifts [a,b], [c,d]; otherwise ipos(alpha, beta) = ineg(beta, alpha).
// All throw TubeError(RankMismatch) if the ranks disagree.
std::int64_t ipos(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta);
std::int64_t ineg(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta);
CrossingReport itotal(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta);

/// Closed forms evaluated on arbitrary lifts; the answer depends only on the
/// projections.
std::int64_t ipos_lifts(std::int64_t n, const ArcU& alpha, const ArcU& beta);
std::int64_t ineg_lifts(std::int64_t n, const ArcU& alpha, const ArcU& beta);

/// Explicit minimal-position representatives in the strip.
///
/// delta is a tent over the canonical lift [c,d] of beta with apex
/// ((c+d)/2, h). gamma starts at the lift [a,b] of alpha with c <= a < c+n
/// and climbs towards the midpoint between the tops of delta and
/// sigma(delta); it descends towards the midpoint between the tops of
/// delta' and sigma(delta'), where delta' is the last translate of delta
/// ending left of b. Its apex v is where those two rays meet.
struct PLRealization {
  PLArc gamma;
  PLArc delta;
  ArcU gamma_lift;
  ArcU delta_lift;
  Point apex;  // v
};

/// Requires len(beta) >= len(alpha) and 0 < h < 1; throws
/// TubeError(InvalidArgument) otherwise.
PLRealization pl_realization(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta, const Rational& h);

enum class SignConvention {
  Standard,  // positive when (tangent of alpha, tangent of beta) is anticlockwise
  Flipped,   // mutation hook for the property checker
};

/// Counts transversal crossings of gamma against every sigma-translate of
/// delta whose x-extent overlaps gamma's. The shorter arc (ties broken by
/// start point) is realized as gamma; signs are reported relative to the
/// argument order (alpha, beta).
CrossingReport cover_count(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta, bool with_points = false,
                           SignConvention convention = SignConvention::Standard);

/// Crossing numbers of arcs in the strip itself (no group action); each is
/// 0 or 1.
std::int64_t strip_ipos(const ArcU& alpha, const ArcU& beta);
std::int64_t strip_ineg(const ArcU& alpha, const ArcU& beta);
CrossingReport strip_total(const ArcU& alpha, const ArcU& beta);

/// Geometric count for strip arcs: realizes both arcs in an annulus whose
/// rank is large enough that no nontrivial translate can meet, then counts.
CrossingReport strip_cover_count(const ArcU& alpha, const ArcU& beta);

/// Preimage of an arc under the squaring map A(2n) -> A(n).
struct DoubledArcPair {
  ArcAnn first;
  ArcAnn second;
};

DoubledArcPair double_arc(const ArcAnn& arc);

/// Sums the four pairwise crossing reports of the doubled arcs in A(2n).
CrossingReport doubled_intersections(std::int64_t n, const ArcAnn& alpha, const ArcAnn& beta);

}  // namespace tubes
