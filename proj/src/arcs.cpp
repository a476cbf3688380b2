#include "tubes/arcs.hpp"

#include "tubes/error.hpp"
#include "tubes/rational.hpp"

namespace tubes {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NegativeExt: return "NegativeExt";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ArcU::ArcU(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (b <= a + 1) {
    throw TubeError(ErrorKind::NotAdmissible,
                    "arc [" + std::to_string(a) + "," + std::to_string(b) + "] needs b > a + 1");
  }
}

std::string ArcU::str() const {
  return "[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
}

ArcAnn::ArcAnn(std::int64_t n, std::int64_t a, std::int64_t len) : n_(n), a_(a), len_(len) {
  if (n < 1) throw TubeError(ErrorKind::InvalidArgument, "rank n must be positive, got " + std::to_string(n));
  if (a < 0 || a >= n) {
    throw TubeError(ErrorKind::InvalidArgument,
                    "start point " + std::to_string(a) + " not in [0," + std::to_string(n) + ")");
  }
  if (len < 2) {
    throw TubeError(ErrorKind::NotAdmissible, "combinatorial length " + std::to_string(len) + " < 2");
  }
}

std::string ArcAnn::str() const {
  return "pi_" + std::to_string(n_) + "[" + std::to_string(a_) + "," + std::to_string(a_ + len_) + "]";
}

ArcU make_arc_u(std::int64_t a, std::int64_t b) {
  return ArcU(a, b);
}

ArcU shift(const ArcU& arc, ShiftPower p, std::int64_t n) {
  return ArcU(arc.a() + p.m * n, arc.b() + p.m * n);
}

ArcAnn project(const ArcU& arc, std::int64_t n) {
  if (n < 1) throw TubeError(ErrorKind::InvalidArgument, "rank n must be positive, got " + std::to_string(n));
  return ArcAnn(n, mod_floor(arc.a(), n), arc.length());
}

ArcU canonical_lift(const ArcAnn& arc) {
  return ArcU(arc.a(), arc.a() + arc.len());
}

std::int64_t winding_number(const ArcAnn& arc) {
  return arc.len() / arc.n();
}

std::int64_t combinatorial_length(const ArcU& arc) {
  return arc.length();
}

ArcAnn tau_arc(const ArcAnn& arc) {
  return ArcAnn(arc.n(), mod_floor(arc.a() - 1, arc.n()), arc.len());
}

ArcAnn tau_inverse_arc(const ArcAnn& arc) {
  return ArcAnn(arc.n(), mod_floor(arc.a() + 1, arc.n()), arc.len());
}

ArcAnn arc_ann(std::int64_t n, std::int64_t a, std::int64_t b) {
  return project(make_arc_u(a, b), n);
}

}  // namespace tubes
