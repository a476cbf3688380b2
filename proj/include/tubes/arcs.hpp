#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tubes {

/// Exponent of the deck transformation of the strip: sigma^m adds m*n to
/// every x-coordinate.
struct ShiftPower {
  std::int64_t m = 0;

  friend ShiftPower operator+(ShiftPower lhs, ShiftPower rhs) { return {lhs.m + rhs.m}; }
  friend bool operator==(ShiftPower, ShiftPower) = default;
};

/// Admissible oriented arc [a,b] in the universal-cover strip, running from
/// marked point (a,0) to (b,0) with b > a + 1.
class ArcU {
 public:
  /// Throws TubeError(NotAdmissible) when b <= a + 1.
  ArcU(std::int64_t a, std::int64_t b);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t length() const noexcept { return b_ - a_; }

  friend auto operator<=>(const ArcU&, const ArcU&) = default;

  std::string str() const;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Admissible arc in the annulus with n marked points, stored as the start
/// point of its canonical lift (reduced mod n) and its combinatorial length.
/// Two arcs are homotopic iff they compare equal.
class ArcAnn {
 public:
  /// Throws TubeError(InvalidArgument) unless n >= 1, 0 <= a < n and
  /// TubeError(NotAdmissible) unless len >= 2.
  ArcAnn(std::int64_t n, std::int64_t a, std::int64_t len);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t len() const noexcept { return len_; }

  friend auto operator<=>(const ArcAnn&, const ArcAnn&) = default;

  /// "pi_n[a,b]" using the canonical lift.
  std::string str() const;

 private:
  std::int64_t n_;
  std::int64_t a_;
  std::int64_t len_;
};

ArcU make_arc_u(std::int64_t a, std::int64_t b);

ArcU shift(const ArcU& arc, ShiftPower p, std::int64_t n);

/// Covering map: reduce the start point mod n and keep the length.
ArcAnn project(const ArcU& arc, std::int64_t n);

/// The unique lift starting in [0, n).
ArcU canonical_lift(const ArcAnn& arc);

/// Number of times the arc wraps the inner boundary: floor(len / n).
std::int64_t winding_number(const ArcAnn& arc);

std::int64_t combinatorial_length(const ArcU& arc);

/// Rotation i -> i-1 of the marked points.
ArcAnn tau_arc(const ArcAnn& arc);
ArcAnn tau_inverse_arc(const ArcAnn& arc);

/// Shorthand for project(make_arc_u(a, b), n).
ArcAnn arc_ann(std::int64_t n, std::int64_t a, std::int64_t b);

}  // namespace tubes
