#pragma once

#include <cstdint>
#include <vector>

#include "tubes/rational.hpp"
#include "tubes/tube_model.hpp"

namespace tubes {

/// Dense matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination. Pivots are the first nonzero entry
/// found scanning the remaining rows in order.
std::size_t rank(RationalMatrix m);

struct RepArrow {
  std::int64_t source;
  std::int64_t target;
  RationalMatrix map;  // dim(target) x dim(source)
};

/// Representation of either the cyclic quiver on vertices 0..n-1 with arrows
/// i -> i-1 (mod n), or of a finite window [first_vertex, last] of the line
/// quiver with arrows j -> j-1.
struct NilpotentRep {
  Rank rank = Rank::infinite();
  std::int64_t first_vertex = 0;
  std::vector<std::int64_t> dims;  // dims[v - first_vertex]
  std::vector<RepArrow> arrows;

  std::int64_t dim_at(std::int64_t vertex) const;
  std::int64_t total_dim() const;
  /// Throws std::logic_error if a matrix shape does not match dims.
  void validate() const;
};

/// Basis e_{a+1..b-1} with e_j at vertex j mod n; the arrow out of vertex
/// j mod n sends e_j to e_{j-1}, and to zero when j-1 = a. Socle S_{a+1},
/// top S_{b-1}. Requires finite rank; asserts nilpotence.
NilpotentRep build_rep(const IndecModule& m);

/// Infinite-rank module on the line-quiver window [lo, hi], which must
/// contain a+1..b-1.
NilpotentRep build_rep_line(const IndecModule& m, std::int64_t lo, std::int64_t hi);

/// Composite of the arrow maps once around the cycle is nilpotent.
bool is_nilpotent(const NilpotentRep& r);

/// Dimension of the space of intertwiners r1 -> r2: nullity of the stacked
/// system f_t X = Y f_s over all arrows s -> t. Throws
/// TubeError(RankMismatch) unless both live on the same quiver window.
std::int64_t hom_dim_linalg(const NilpotentRep& r1, const NilpotentRep& r2);

/// <d, e> = sum_v d_v e_v - sum_{s->t} d_s e_t on the quiver of r1.
std::int64_t euler_form(const NilpotentRep& r1, const NilpotentRep& r2);

/// dim Ext^1(m1, m2) = dim Hom(m2, tau m1).
std::int64_t ext_dim_ar(const IndecModule& m1, const IndecModule& m2);

/// dim Ext^1(m1, m2) = dim Hom(m1, m2) - <dim m1, dim m2>. Throws
/// TubeError(NegativeExt) if the difference is negative.
std::int64_t ext_dim_euler(const IndecModule& m1, const IndecModule& m2);

/// Hom dimension between finite-rank modules by linear algebra.
std::int64_t hom_dim_oracle(const IndecModule& m1, const IndecModule& m2);

// Line-quiver (ZA_infinity) variants; both arguments must have infinite rank.
std::int64_t hom_dim_line(const IndecModule& m1, const IndecModule& m2);
std::int64_t ext_dim_line(const IndecModule& m1, const IndecModule& m2);
std::int64_t ext_dim_line_euler(const IndecModule& m1, const IndecModule& m2);

}  // namespace tubes
