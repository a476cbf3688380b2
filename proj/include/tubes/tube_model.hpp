#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubes/arcs.hpp"

namespace tubes {

/// Rank of a tube: a positive integer n, or infinity for the ZA_infinity case.
class Rank {
 public:
  static Rank finite(std::int64_t n);
  static Rank infinite() { return Rank(0); }

  bool is_finite() const noexcept { return n_ > 0; }
  /// Only meaningful when finite.
  std::int64_t n() const noexcept { return n_; }

  friend bool operator==(Rank, Rank) = default;

  std::string str() const;

 private:
  explicit Rank(std::int64_t n) : n_(n) {}
  std::int64_t n_;
};

/// Indecomposable M[a,b] of the tube of rank n (normalized to 0 <= a < n),
/// or X[a,b] of the ZA_infinity category when the rank is infinite.
class IndecModule {
 public:
  /// Throws TubeError(NotAdmissible) if b <= a + 1. Finite-rank labels are
  /// normalized by shifting both ends by a multiple of n.
  IndecModule(Rank rank, std::int64_t a, std::int64_t b);

  Rank rank() const noexcept { return rank_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  /// Number of composition factors, b - a - 1.
  std::int64_t length() const noexcept { return b_ - a_ - 1; }

  friend bool operator==(const IndecModule&, const IndecModule&) = default;

  /// "M[a,b]" or "X[a,b]".
  std::string str() const;

 private:
  Rank rank_;
  std::int64_t a_;
  std::int64_t b_;
};

struct SimpleLabel {
  std::int64_t index;
  friend bool operator==(SimpleLabel, SimpleLabel) = default;
};

IndecModule phi(const ArcAnn& arc);
ArcAnn phi_inv(const IndecModule& m);

/// Arc of an infinite-rank module in the strip.
ArcU strip_arc(const IndecModule& m);

/// S_{a+1}, ..., S_{b-1} from the socle upwards (indices mod n when finite).
std::vector<SimpleLabel> composition_series(const IndecModule& m);

IndecModule tau_module(const IndecModule& m);

/// dim Hom(M[c,d], M[x,y]) by counting possible images: integers t with
/// x+1 < t <= y, t = d (mod n) and t - x <= d - c. At infinite rank the
/// congruence becomes t = d.
std::int64_t hom_dim(const IndecModule& from, const IndecModule& to);

/// dim Ext^1 in the tube, read off as the negative crossing number.
std::int64_t ext_dim_tube(const IndecModule& m1, const IndecModule& m2);

/// dim Ext^1 in the cluster tube: Ext(m1,m2) + Ext(m2,m1).
std::int64_t ext_dim_cluster(const IndecModule& m1, const IndecModule& m2);

/// ZA_infinity: negative strip crossing (0 or 1), or the total (0..2) for the
/// cluster category.
std::int64_t ext_dim_infinity(const IndecModule& m1, const IndecModule& m2, bool cluster);

}  // namespace tubes
