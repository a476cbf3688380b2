#include "tubes/tube_model.hpp"

#include "tubes/error.hpp"
#include "tubes/intersections.hpp"
#include "tubes/rational.hpp"

namespace tubes {

namespace {

void require_same_rank(const IndecModule& m1, const IndecModule& m2) {
  if (!(m1.rank() == m2.rank())) {
    throw TubeError(ErrorKind::RankMismatch, m1.str() + " has rank " + m1.rank().str() + ", " + m2.str() +
                                                 " has rank " + m2.rank().str());
  }
}

void require_finite(const IndecModule& m) {
  if (!m.rank().is_finite()) throw TubeError(ErrorKind::RankMismatch, m.str() + " has infinite rank");
}

void require_infinite(const IndecModule& m) {
  if (m.rank().is_finite()) throw TubeError(ErrorKind::RankMismatch, m.str() + " has finite rank");
}

}  // namespace

Rank Rank::finite(std::int64_t n) {
  if (n < 1) throw TubeError(ErrorKind::InvalidArgument, "rank must be positive, got " + std::to_string(n));
  return Rank(n);
}

std::string Rank::str() const {
  return is_finite() ? std::to_string(n_) : "inf";
}

IndecModule::IndecModule(Rank rank, std::int64_t a, std::int64_t b) : rank_(rank), a_(a), b_(b) {
  if (b <= a + 1) {
    throw TubeError(ErrorKind::NotAdmissible,
                    "module label [" + std::to_string(a) + "," + std::to_string(b) + "] needs b > a + 1");
  }
  if (rank.is_finite()) {
    const std::int64_t offset = a_ - mod_floor(a_, rank.n());
    a_ -= offset;
    b_ -= offset;
  }
}

std::string IndecModule::str() const {
  return std::string(rank_.is_finite() ? "M" : "X") + "[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
}

IndecModule phi(const ArcAnn& arc) {
  return IndecModule(Rank::finite(arc.n()), arc.a(), arc.a() + arc.len());
}

ArcAnn phi_inv(const IndecModule& m) {
  require_finite(m);
  return ArcAnn(m.rank().n(), m.a(), m.b() - m.a());
}

ArcU strip_arc(const IndecModule& m) {
  require_infinite(m);
  return ArcU(m.a(), m.b());
}

std::vector<SimpleLabel> composition_series(const IndecModule& m) {
  std::vector<SimpleLabel> out;
  for (std::int64_t j = m.a() + 1; j < m.b(); ++j) {
    out.push_back({m.rank().is_finite() ? mod_floor(j, m.rank().n()) : j});
  }
  return out;
}

IndecModule tau_module(const IndecModule& m) {
  return IndecModule(m.rank(), m.a() - 1, m.b() - 1);
}

std::int64_t hom_dim(const IndecModule& from, const IndecModule& to) {
  require_same_rank(from, to);
  const std::int64_t c = from.a();
  const std::int64_t d = from.b();
  const std::int64_t x = to.a();
  const std::int64_t y = to.b();
  // t ranges over (x+1, min(y, x + d - c)].
  const std::int64_t lo = x + 1;
  const std::int64_t hi = std::min(y, x + (d - c));
  if (hi <= lo) return 0;
  if (!from.rank().is_finite()) return (lo < d && d <= hi) ? 1 : 0;
  const std::int64_t n = from.rank().n();
  return floor_div(hi - d, n) - floor_div(lo - d, n);
}

std::int64_t ext_dim_tube(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  require_finite(m1);
  return ineg(m1.rank().n(), phi_inv(m1), phi_inv(m2));
}

std::int64_t ext_dim_cluster(const IndecModule& m1, const IndecModule& m2) {
  return ext_dim_tube(m1, m2) + ext_dim_tube(m2, m1);
}

std::int64_t ext_dim_infinity(const IndecModule& m1, const IndecModule& m2, bool cluster) {
  require_same_rank(m1, m2);
  require_infinite(m1);
  const ArcU x = strip_arc(m1);
  const ArcU y = strip_arc(m2);
  return cluster ? strip_total(x, y).total : strip_ineg(x, y);
}

}  // namespace tubes
