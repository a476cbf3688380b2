#include "tubes/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tubes {

std::vector<Segment> PLArc::segments() const {
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back({vertices[i], vertices[i + 1]});
  return out;
}

PLArc PLArc::translated(const Rational& dx) const {
  PLArc out = *this;
  for (auto& v : out.vertices) v.x += dx;
  return out;
}

Rational PLArc::min_x() const {
  if (vertices.empty()) throw std::logic_error("empty PL arc");
  return std::min_element(vertices.begin(), vertices.end(),
                          [](const Point& p, const Point& q) { return p.x < q.x; })
      ->x;
}

Rational PLArc::max_x() const {
  if (vertices.empty()) throw std::logic_error("empty PL arc");
  return std::max_element(vertices.begin(), vertices.end(),
                          [](const Point& p, const Point& q) { return p.x < q.x; })
      ->x;
}

SegmentHit intersect(const Segment& s, const Segment& t) {
  const Vec r = s.direction();
  const Vec q = t.direction();
  const Vec w = t.from - s.from;
  const Rational denom = cross(r, q);
  SegmentHit hit;
  if (denom.is_zero()) {
    if (!cross(w, r).is_zero()) return hit;  // parallel, distinct lines
    // Collinear: project onto r and compare parameter intervals.
    const Rational rr = r.dx * r.dx + r.dy * r.dy;
    Rational t0 = (w.dx * r.dx + w.dy * r.dy) / rr;
    Rational t1 = t0 + (q.dx * r.dx + q.dy * r.dy) / rr;
    if (t1 < t0) std::swap(t0, t1);
    const Rational lo = std::max(t0, Rational(0));
    const Rational hi = std::min(t1, Rational(1));
    if (lo > hi) return hit;
    if (lo < hi) {
      hit.relation = SegmentRelation::Overlapping;
      return hit;
    }
    hit.relation = SegmentRelation::Crossing;
    hit.point = {s.from.x + r.dx * lo, s.from.y + r.dy * lo};
    hit.at_endpoint = true;
    return hit;
  }
  const Rational ts = cross(w, q) / denom;
  const Rational tt = cross(w, r) / denom;
  if (ts < 0 || ts > 1 || tt < 0 || tt > 1) return hit;
  hit.relation = SegmentRelation::Crossing;
  hit.point = {s.from.x + r.dx * ts, s.from.y + r.dy * ts};
  hit.at_endpoint = ts.is_zero() || ts == 1 || tt.is_zero() || tt == 1;
  return hit;
}

}  // namespace tubes
