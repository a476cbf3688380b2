#include "tubes/check.hpp"

#include <functional>
#include <sstream>

#include "tubes/error.hpp"
#include "tubes/quiver.hpp"
#include "tubes/rep_oracle.hpp"
#include "tubes/tube_model.hpp"

namespace tubes {

namespace {

std::string triple(const CrossingReport& r) {
  return "(" + std::to_string(r.pos) + "," + std::to_string(r.neg) + "," + std::to_string(r.total) + ")";
}

std::string pair_label(std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
  return "n=" + std::to_string(n) + " " + canonical_lift(x).str() + " " + canonical_lift(y).str();
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.counterexample) result_.counterexample = describe();
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<ArcAnn> arcs_of_rank(std::int64_t n, std::int64_t len_max) {
  std::vector<ArcAnn> out;
  for (std::int64_t len = 2; len <= len_max; ++len) {
    for (std::int64_t a = 0; a < n; ++a) out.emplace_back(n, a, len);
  }
  return out;
}

template <typename Fn>
void for_each_pair(const CheckOptions& o, Fn&& fn) {
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    const auto arcs = arcs_of_rank(n, o.len_max);
    for (const ArcAnn& x : arcs) {
      for (const ArcAnn& y : arcs) fn(n, x, y);
    }
  }
}

CheckResult anchor(const CheckOptions& o) {
  Recorder rec("anchor-rank4");
  const ArcAnn alpha = arc_ann(4, 0, 26);
  const ArcAnn beta = arc_ann(4, 3, 17);
  const CrossingReport geometric = cover_count(4, alpha, beta, false, o.convention);
  const CrossingReport closed = itotal(4, alpha, beta);
  const std::string where = pair_label(4, alpha, beta);
  auto is_expected = [](const CrossingReport& r) { return r.pos == 3 && r.neg == 4 && r.total == 7; };
  rec.expect(is_expected(geometric), [&] { return where + ": cover count " + triple(geometric) + ", expected (3,4,7)"; });
  rec.expect(is_expected(closed), [&] { return where + ": closed form " + triple(closed) + ", expected (3,4,7)"; });
  const IndecModule m1 = phi(alpha);
  const IndecModule m2 = phi(beta);
  rec.expect(ext_dim_tube(m1, m2) == 4 && ext_dim_tube(m2, m1) == 3 && ext_dim_cluster(m1, m2) == 7,
             [&] { return where + ": Ext dimensions differ from (4,3,7)"; });
  return rec.take();
}

CheckResult fundamental_group_powers(const CheckOptions& o) {
  Recorder rec("cycle-powers");
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(o.n_max, 4); ++n) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t s = 1; s <= 6; ++s) {
        if (r * n < 2 || s * n < 2) continue;  // c^1 is a boundary arc when n = 1
        const ArcAnn x(n, 0, r * n);
        const ArcAnn y(n, 0, s * n);
        const CrossingReport got = itotal(n, x, y);
        const std::int64_t k = std::min(r, s) - 1;
        rec.expect(got.pos == k && got.neg == k && got.total == 2 * k,
                   [&] { return pair_label(n, x, y) + ": " + triple(got); });
      }
    }
  }
  return rec.take();
}

CheckResult sign_additivity(const CheckOptions& o) {
  Recorder rec("total-is-pos-plus-neg");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const CrossingReport r = itotal(n, x, y);
    rec.expect(r.total == r.pos + r.neg && r.pos >= 0 && r.neg >= 0,
               [&] { return pair_label(n, x, y) + ": " + triple(r); });
  });
  return rec.take();
}

CheckResult swap_antisymmetry(const CheckOptions& o) {
  Recorder rec("swap-antisymmetry");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const bool ok = ipos(n, x, y) == ineg(n, y, x) && itotal(n, x, y).total == itotal(n, y, x).total;
    rec.expect(ok, [&] { return pair_label(n, x, y); });
  });
  return rec.take();
}

CheckResult tau_invariance(const CheckOptions& o) {
  Recorder rec("tau-invariance");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const ArcAnn tx = tau_arc(x);
    const ArcAnn ty = tau_arc(y);
    rec.expect(ipos(n, tx, ty) == ipos(n, x, y) && ineg(n, tx, ty) == ineg(n, x, y),
               [&] { return pair_label(n, x, y); });
  });
  return rec.take();
}

CheckResult shift_invariance(const CheckOptions& o) {
  Recorder rec("shift-invariance");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const ArcU lx = canonical_lift(x);
    const ArcU ly = canonical_lift(y);
    const std::int64_t p = ipos_lifts(n, lx, ly);
    const std::int64_t q = ineg_lifts(n, lx, ly);
    for (std::int64_t i = -2; i <= 2; ++i) {
      for (std::int64_t j = -2; j <= 2; ++j) {
        const ArcU sx = shift(lx, {i}, n);
        const ArcU sy = shift(ly, {j}, n);
        rec.expect(ipos_lifts(n, sx, sy) == p && ineg_lifts(n, sx, sy) == q, [&] {
          return pair_label(n, x, y) + " with lifts " + sx.str() + " " + sy.str();
        });
      }
    }
  });
  return rec.take();
}

CheckResult route_agreement(const CheckOptions& o) {
  Recorder rec("cover-count-matches-closed-form");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const CrossingReport geometric = cover_count(n, x, y, false, o.convention);
    const CrossingReport closed = itotal(n, x, y);
    rec.expect(geometric.same_numbers(closed), [&] {
      return pair_label(n, x, y) + ": cover " + triple(geometric) + " vs closed " + triple(closed);
    });
  });
  return rec.take();
}

CheckResult doubling(const CheckOptions& o) {
  Recorder rec("doubling");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const CrossingReport d = doubled_intersections(n, x, y);
    const CrossingReport r = itotal(n, x, y);
    rec.expect(d.pos == 2 * r.pos && d.neg == 2 * r.neg && d.total == 2 * r.total,
               [&] { return pair_label(n, x, y) + ": doubled " + triple(d) + " vs " + triple(r); });
  });
  return rec.take();
}

CheckResult strip_consistency(const CheckOptions& o) {
  Recorder rec("strip-sum-matches-annulus");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const ArcU lx = canonical_lift(x);
    const ArcU ly = canonical_lift(y);
    const std::int64_t reach = (x.len() + y.len()) / n + 2;
    CrossingReport sum;
    for (std::int64_t m = -reach; m <= reach; ++m) {
      const CrossingReport s = strip_total(lx, shift(ly, {m}, n));
      sum.pos += s.pos;
      sum.neg += s.neg;
    }
    sum.total = sum.pos + sum.neg;
    const CrossingReport r = itotal(n, x, y);
    rec.expect(sum.same_numbers(r), [&] { return pair_label(n, x, y) + ": strip sum " + triple(sum) + " vs " + triple(r); });
  });
  return rec.take();
}

CheckResult ext_oracle(const CheckOptions& o) {
  Recorder rec("ext-matches-oracle");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const IndecModule m1 = phi(x);
    const IndecModule m2 = phi(y);
    const std::int64_t geometric = ext_dim_tube(m1, m2);
    const std::int64_t ar = ext_dim_ar(m1, m2);
    const std::int64_t euler = ext_dim_euler(m1, m2);
    rec.expect(geometric == ar && ar == euler, [&] {
      return "n=" + std::to_string(n) + " " + m1.str() + " " + m2.str() + ": tube " + std::to_string(geometric) +
             ", AR " + std::to_string(ar) + ", Euler " + std::to_string(euler);
    });
  });
  return rec.take();
}

CheckResult hom_oracle(const CheckOptions& o) {
  Recorder rec("hom-matches-oracle");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const IndecModule m1 = phi(x);
    const IndecModule m2 = phi(y);
    const std::int64_t counted = hom_dim(m1, m2);
    const std::int64_t solved = hom_dim_oracle(m1, m2);
    rec.expect(counted == solved, [&] {
      return "n=" + std::to_string(n) + " " + m1.str() + " " + m2.str() + ": counted " + std::to_string(counted) +
             ", solved " + std::to_string(solved);
    });
  });
  return rec.take();
}

CheckResult cluster_symmetrization(const CheckOptions& o) {
  Recorder rec("cluster-ext-is-total-crossings");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const IndecModule m1 = phi(x);
    const IndecModule m2 = phi(y);
    const std::int64_t cl = ext_dim_cluster(m1, m2);
    rec.expect(cl == itotal(n, x, y).total && cl == ext_dim_cluster(m2, m1) &&
                   ext_dim_tube(m2, m1) == ipos(n, x, y),
               [&] { return pair_label(n, x, y); });
  });
  return rec.take();
}

CheckResult tau_equivariance(const CheckOptions& o) {
  Recorder rec("ext-tau-equivariance");
  for_each_pair(o, [&](std::int64_t n, const ArcAnn& x, const ArcAnn& y) {
    const IndecModule m1 = phi(x);
    const IndecModule m2 = phi(y);
    rec.expect(ext_dim_tube(tau_module(m1), tau_module(m2)) == ext_dim_tube(m1, m2),
               [&] { return pair_label(n, x, y); });
  });
  return rec.take();
}

CheckResult mesh_symmetry(const CheckOptions& o) {
  Recorder rec("quiver-mesh-symmetry");
  for (std::int64_t n = 1; n <= o.n_max; ++n) {
    const TubeQuiver q = generate_window(n, o.len_max);
    const auto bad = mesh_violation(q);
    rec.expect(!bad && static_cast<std::int64_t>(q.vertices.size()) == n * (o.len_max - 1), [&] {
      return "n=" + std::to_string(n) + " max_len=" + std::to_string(o.len_max) +
             (bad ? ": mesh fails at " + bad->str() : ": wrong vertex count");
    });
  }
  return rec.take();
}

CheckResult infinity_case(const CheckOptions& o) {
  Recorder rec("za-infinity");
  const Rank inf = Rank::infinite();
  std::vector<IndecModule> modules;
  for (std::int64_t a = -o.infinity_bound; a <= o.infinity_bound; ++a) {
    for (std::int64_t b = a + 2; b <= o.infinity_bound; ++b) modules.emplace_back(inf, a, b);
  }
  for (const IndecModule& m1 : modules) {
    for (const IndecModule& m2 : modules) {
      const std::int64_t tube_side = ext_dim_infinity(m1, m2, false);
      const std::int64_t cluster_side = ext_dim_infinity(m1, m2, true);
      const std::int64_t line = ext_dim_line(m1, m2);
      const std::int64_t line_euler = ext_dim_line_euler(m1, m2);
      const std::int64_t line_back = ext_dim_line(m2, m1);
      const CrossingReport geometric = strip_cover_count(strip_arc(m1), strip_arc(m2));
      const bool ok = tube_side == line && line == line_euler && tube_side <= 1 && cluster_side <= 2 &&
                      cluster_side == line + line_back && geometric.same_numbers(strip_total(strip_arc(m1), strip_arc(m2)));
      rec.expect(ok, [&] {
        return m1.str() + " " + m2.str() + ": strip " + std::to_string(tube_side) + ", line oracle " +
               std::to_string(line) + "/" + std::to_string(line_euler) + ", cluster " + std::to_string(cluster_side);
      });
    }
  }
  return rec.take();
}

}  // namespace

bool CheckSummary::ok() const { return total_failed() == 0; }

std::int64_t CheckSummary::total_failed() const {
  std::int64_t sum = 0;
  for (const auto& r : results) sum += r.failed;
  return sum;
}

const CheckResult* CheckSummary::first_failure() const {
  for (const auto& r : results) {
    if (r.failed > 0) return &r;
  }
  return nullptr;
}

void validate(const CheckOptions& o) {
  if (o.n_max < 1 || o.n_max > 8) {
    throw TubeError(ErrorKind::InvalidArgument, "n-max must be in [1,8], got " + std::to_string(o.n_max));
  }
  if (o.len_max < 2 || o.len_max > 32) {
    throw TubeError(ErrorKind::InvalidArgument, "len-max must be in [2,32], got " + std::to_string(o.len_max));
  }
  if (o.infinity_bound < 2 || o.infinity_bound > 16) {
    throw TubeError(ErrorKind::InvalidArgument,
                    "infinity bound must be in [2,16], got " + std::to_string(o.infinity_bound));
  }
}

CheckSummary run_checks(const CheckOptions& options) {
  validate(options);
  CheckSummary summary;
  summary.results.push_back(anchor(options));
  summary.results.push_back(fundamental_group_powers(options));
  summary.results.push_back(sign_additivity(options));
  summary.results.push_back(swap_antisymmetry(options));
  summary.results.push_back(tau_invariance(options));
  summary.results.push_back(shift_invariance(options));
  summary.results.push_back(route_agreement(options));
  summary.results.push_back(strip_consistency(options));
  summary.results.push_back(doubling(options));
  summary.results.push_back(ext_oracle(options));
  summary.results.push_back(hom_oracle(options));
  summary.results.push_back(cluster_symmetrization(options));
  summary.results.push_back(tau_equivariance(options));
  summary.results.push_back(mesh_symmetry(options));
  summary.results.push_back(infinity_case(options));
  return summary;
}

}  // namespace tubes
