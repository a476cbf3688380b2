#include "tubes/rep_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tubes/error.hpp"

namespace tubes {

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::logic_error("matrix shape mismatch in product");
  RationalMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& x = lhs(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += x * rhs(k, j);
      }
    }
  }
  return out;
}

std::size_t rank(RationalMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));
    }
    const Rational pivot = m(pivot_row, col);
    for (std::size_t rr = pivot_row + 1; rr < m.rows(); ++rr) {
      if (m(rr, col).is_zero()) continue;
      const Rational factor = m(rr, col) / pivot;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(pivot_row, c).is_zero()) m(rr, c) -= factor * m(pivot_row, c);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::int64_t NilpotentRep::dim_at(std::int64_t vertex) const {
  const std::int64_t i = vertex - first_vertex;
  if (i < 0 || i >= static_cast<std::int64_t>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(i)];
}

std::int64_t NilpotentRep::total_dim() const {
  std::int64_t sum = 0;
  for (auto d : dims) sum += d;
  return sum;
}

void NilpotentRep::validate() const {
  for (const RepArrow& arrow : arrows) {
    if (static_cast<std::int64_t>(arrow.map.rows()) != dim_at(arrow.target) ||
        static_cast<std::int64_t>(arrow.map.cols()) != dim_at(arrow.source)) {
      throw std::logic_error("arrow " + std::to_string(arrow.source) + "->" + std::to_string(arrow.target) +
                             " has a matrix of the wrong shape");
    }
  }
}

namespace {

// Places basis vectors e_j (a < j < b) at vertex(j) and wires the arrow
// out of each vertex as e_j -> e_{j-1}.
template <typename VertexOf>
NilpotentRep assemble(const IndecModule& m, NilpotentRep rep, VertexOf vertex_of) {
  std::map<std::int64_t, std::pair<std::int64_t, std::size_t>> slot;  // j -> (vertex, index)
  for (std::int64_t j = m.a() + 1; j < m.b(); ++j) {
    const std::int64_t v = vertex_of(j);
    auto& d = rep.dims[static_cast<std::size_t>(v - rep.first_vertex)];
    slot[j] = {v, static_cast<std::size_t>(d)};
    ++d;
  }
  for (RepArrow& arrow : rep.arrows) {
    arrow.map = RationalMatrix(static_cast<std::size_t>(rep.dim_at(arrow.target)),
                               static_cast<std::size_t>(rep.dim_at(arrow.source)));
  }
  for (std::int64_t j = m.a() + 2; j < m.b(); ++j) {
    const auto [src, col] = slot.at(j);
    const auto [dst, row] = slot.at(j - 1);
    auto it = std::find_if(rep.arrows.begin(), rep.arrows.end(),
                           [&](const RepArrow& arrow) { return arrow.source == src && arrow.target == dst; });
    if (it == rep.arrows.end()) throw std::logic_error("no arrow for basis step");
    it->map(row, col) = 1;
  }
  rep.validate();
  return rep;
}

void require_same_quiver(const NilpotentRep& r1, const NilpotentRep& r2) {
  if (!(r1.rank == r2.rank) || r1.first_vertex != r2.first_vertex || r1.dims.size() != r2.dims.size() ||
      r1.arrows.size() != r2.arrows.size()) {
    throw TubeError(ErrorKind::RankMismatch, "representations live on different quivers");
  }
  for (std::size_t i = 0; i < r1.arrows.size(); ++i) {
    if (r1.arrows[i].source != r2.arrows[i].source || r1.arrows[i].target != r2.arrows[i].target) {
      throw TubeError(ErrorKind::RankMismatch, "representations live on different quivers");
    }
  }
}

void require_finite(const IndecModule& m) {
  if (!m.rank().is_finite()) throw TubeError(ErrorKind::RankMismatch, m.str() + " has infinite rank");
}

void require_infinite(const IndecModule& m) {
  if (m.rank().is_finite()) throw TubeError(ErrorKind::RankMismatch, m.str() + " has finite rank");
}

void require_same_rank(const IndecModule& m1, const IndecModule& m2) {
  if (!(m1.rank() == m2.rank())) {
    throw TubeError(ErrorKind::RankMismatch, m1.str() + " and " + m2.str() + " have different ranks");
  }
}

}  // namespace

NilpotentRep build_rep(const IndecModule& m) {
  require_finite(m);
  const std::int64_t n = m.rank().n();
  NilpotentRep rep;
  rep.rank = m.rank();
  rep.first_vertex = 0;
  rep.dims.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) rep.arrows.push_back({i, mod_floor(i - 1, n), {}});
  rep = assemble(m, std::move(rep), [n](std::int64_t j) { return mod_floor(j, n); });
  if (!is_nilpotent(rep)) throw std::logic_error("representation of " + m.str() + " is not nilpotent");
  return rep;
}

NilpotentRep build_rep_line(const IndecModule& m, std::int64_t lo, std::int64_t hi) {
  require_infinite(m);
  if (lo > m.a() + 1 || hi < m.b() - 1) {
    throw TubeError(ErrorKind::InvalidArgument, "window does not contain the support of " + m.str());
  }
  NilpotentRep rep;
  rep.rank = Rank::infinite();
  rep.first_vertex = lo;
  rep.dims.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t j = lo + 1; j <= hi; ++j) rep.arrows.push_back({j, j - 1, {}});
  return assemble(m, std::move(rep), [](std::int64_t j) { return j; });
}

bool is_nilpotent(const NilpotentRep& r) {
  if (!r.rank.is_finite()) return true;
  const std::int64_t n = r.rank.n();
  const auto d0 = static_cast<std::size_t>(r.dim_at(0));
  if (d0 == 0) return true;
  auto arrow_from = [&](std::int64_t v) -> const RationalMatrix& {
    for (const RepArrow& arrow : r.arrows) {
      if (arrow.source == v) return arrow.map;
    }
    throw std::logic_error("missing arrow");
  };
  // Walk 0 -> n-1 -> ... -> 1 -> 0.
  RationalMatrix cycle = arrow_from(0);
  for (std::int64_t v = n - 1; v >= 1; --v) cycle = arrow_from(v) * cycle;
  RationalMatrix power = RationalMatrix::identity(d0);
  for (std::size_t k = 0; k < d0; ++k) power = power * cycle;
  return power.is_zero();
}

std::int64_t hom_dim_linalg(const NilpotentRep& r1, const NilpotentRep& r2) {
  require_same_quiver(r1, r2);
  const std::size_t vertex_count = r1.dims.size();
  // Unknown block for vertex v is f_v, a dim2(v) x dim1(v) matrix stored row-major.
  std::vector<std::size_t> offset(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    offset[v + 1] = offset[v] + static_cast<std::size_t>(r2.dims[v] * r1.dims[v]);
  }
  const std::size_t unknowns = offset[vertex_count];
  if (unknowns == 0) return 0;

  auto var = [&](std::int64_t vertex, std::size_t row, std::size_t col) {
    const auto v = static_cast<std::size_t>(vertex - r1.first_vertex);
    return offset[v] + row * static_cast<std::size_t>(r1.dims[v]) + col;
  };

  std::size_t equations = 0;
  for (const RepArrow& arrow : r1.arrows) {
    equations += static_cast<std::size_t>(r2.dim_at(arrow.target) * r1.dim_at(arrow.source));
  }
  RationalMatrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < r1.arrows.size(); ++k) {
    const RepArrow& x = r1.arrows[k];
    const RepArrow& y = r2.arrows[k];
    const auto s = x.source;
    const auto t = x.target;
    const auto d1s = static_cast<std::size_t>(r1.dim_at(s));
    const auto d1t = static_cast<std::size_t>(r1.dim_at(t));
    const auto d2s = static_cast<std::size_t>(r2.dim_at(s));
    const auto d2t = static_cast<std::size_t>(r2.dim_at(t));
    // (f_t X - Y f_s)[i][j] = 0
    for (std::size_t i = 0; i < d2t; ++i) {
      for (std::size_t j = 0; j < d1s; ++j, ++row) {
        for (std::size_t l = 0; l < d1t; ++l) {
          if (!x.map(l, j).is_zero()) system(row, var(t, i, l)) += x.map(l, j);
        }
        for (std::size_t l = 0; l < d2s; ++l) {
          if (!y.map(i, l).is_zero()) system(row, var(s, l, j)) -= y.map(i, l);
        }
      }
    }
  }
  return static_cast<std::int64_t>(unknowns - rank(std::move(system)));
}

std::int64_t euler_form(const NilpotentRep& r1, const NilpotentRep& r2) {
  require_same_quiver(r1, r2);
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < r1.dims.size(); ++v) sum += r1.dims[v] * r2.dims[v];
  for (const RepArrow& arrow : r1.arrows) sum -= r1.dim_at(arrow.source) * r2.dim_at(arrow.target);
  return sum;
}

std::int64_t hom_dim_oracle(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  return hom_dim_linalg(build_rep(m1), build_rep(m2));
}

std::int64_t ext_dim_ar(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  return hom_dim_linalg(build_rep(m2), build_rep(tau_module(m1)));
}

std::int64_t ext_dim_euler(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  const NilpotentRep r1 = build_rep(m1);
  const NilpotentRep r2 = build_rep(m2);
  const std::int64_t ext = hom_dim_linalg(r1, r2) - euler_form(r1, r2);
  if (ext < 0) {
    throw TubeError(ErrorKind::NegativeExt, "Euler form gives negative Ext for " + m1.str() + ", " + m2.str());
  }
  return ext;
}

namespace {

std::pair<std::int64_t, std::int64_t> common_window(std::initializer_list<IndecModule> ms) {
  std::int64_t lo = ms.begin()->a() + 1;
  std::int64_t hi = ms.begin()->b() - 1;
  for (const IndecModule& m : ms) {
    lo = std::min(lo, m.a() + 1);
    hi = std::max(hi, m.b() - 1);
  }
  return {lo, hi};
}

}  // namespace

std::int64_t hom_dim_line(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  require_infinite(m1);
  const auto [lo, hi] = common_window({m1, m2});
  return hom_dim_linalg(build_rep_line(m1, lo, hi), build_rep_line(m2, lo, hi));
}

std::int64_t ext_dim_line(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  require_infinite(m1);
  return hom_dim_line(m2, tau_module(m1));
}

std::int64_t ext_dim_line_euler(const IndecModule& m1, const IndecModule& m2) {
  require_same_rank(m1, m2);
  require_infinite(m1);
  const auto [lo, hi] = common_window({m1, m2});
  const NilpotentRep r1 = build_rep_line(m1, lo, hi);
  const NilpotentRep r2 = build_rep_line(m2, lo, hi);
  const std::int64_t ext = hom_dim_linalg(r1, r2) - euler_form(r1, r2);
  if (ext < 0) {
    throw TubeError(ErrorKind::NegativeExt, "Euler form gives negative Ext for " + m1.str() + ", " + m2.str());
  }
  return ext;
}

}  // namespace tubes
