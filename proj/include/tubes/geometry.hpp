#pragma once

#include <optional>
#include <vector>

#include "tubes/rational.hpp"

namespace tubes {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& lhs, const Point& rhs) {
    if (auto c = lhs.x <=> rhs.x; c != 0) return c;
    return lhs.y <=> rhs.y;
  }
};

struct Vec {
  Rational dx;
  Rational dy;
};

inline Vec operator-(const Point& p, const Point& q) {
  return {p.x - q.x, p.y - q.y};
}

/// z-component of the planar cross product; > 0 when (u, v) is a
/// positively oriented (anticlockwise) pair.
inline Rational cross(const Vec& u, const Vec& v) {
  return u.dx * v.dy - u.dy * v.dx;
}

struct Segment {
  Point from;
  Point to;

  Vec direction() const { return to - from; }
};

/// Oriented piecewise-linear arc in the strip 0 <= y <= 1. The first and
/// last vertex sit on y = 0 at integer x; interior vertices have 0 < y < 1.
struct PLArc {
  std::vector<Point> vertices;

  std::vector<Segment> segments() const;
  PLArc translated(const Rational& dx) const;
  Rational min_x() const;
  Rational max_x() const;
};

enum class SegmentRelation { Disjoint, Crossing, Overlapping };

struct SegmentHit {
  SegmentRelation relation = SegmentRelation::Disjoint;
  Point point;             // valid for Crossing
  bool at_endpoint = false;  // crossing lies on an endpoint of either segment
};

/// Exact intersection of two closed segments. Collinear segments sharing
/// more than a point report Overlapping.
SegmentHit intersect(const Segment& s, const Segment& t);

}  // namespace tubes
