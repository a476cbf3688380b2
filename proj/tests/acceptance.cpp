// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "tubes/check.hpp"
#include "tubes/cli.hpp"
#include "tubes/intersections.hpp"
#include "tubes/quiver.hpp"
#include "tubes/rep_oracle.hpp"
#include "tubes/tube_model.hpp"

using namespace tubes;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

json cli_json(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "tubes");
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(args, out, err);
  if (code) *code = rc;
  if (rc != kExitOk) return json();
  return json::parse(out.str());
}

std::string triple(const CrossingReport& r) {
  return "(" + std::to_string(r.pos) + "," + std::to_string(r.neg) + "," + std::to_string(r.total) + ")";
}

std::vector<ArcAnn> arcs_of_rank(std::int64_t n, std::int64_t len_max) {
  std::vector<ArcAnn> out;
  for (std::int64_t len = 2; len <= len_max; ++len) {
    for (std::int64_t a = 0; a < n; ++a) out.emplace_back(n, a, len);
  }
  return out;
}

Outcome anchor() {
  Outcome o;
  const json r = cli_json({"intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--json"});
  if (r.is_null() || r["pos"] != 3 || r["neg"] != 4 || r["total"] != 7) o.fail("intersect gave " + r.dump());
  const json e = cli_json({"ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--json"});
  if (e.is_null() || e["ext"] != 4) o.fail("ext gave " + e.dump());
  const json s = cli_json({"ext", "--n", "4", "--mod", "3,17", "--mod", "0,26", "--json"});
  if (s.is_null() || s["ext"] != 3) o.fail("swapped ext gave " + s.dump());
  const json c = cli_json({"ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--cluster", "--json"});
  if (c.is_null() || c["ext"] != 7) o.fail("cluster ext gave " + c.dump());
  o.detail = o.ok ? "(3,4,7), ext 4/3, cluster 7" : o.detail;
  return o;
}

Outcome cycle_powers() {
  Outcome o;
  int cases = 0;
  int skipped = 0;
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t s = 1; s <= 6; ++s) {
        // pi_1[0,1] is a boundary segment, not an admissible arc.
        if (r * n < 2 || s * n < 2) {
          ++skipped;
          continue;
        }
        ++cases;
        const CrossingReport got = itotal(n, ArcAnn(n, 0, r * n), ArcAnn(n, 0, s * n));
        const std::int64_t k = std::min(r, s) - 1;
        if (got.pos != k || got.neg != k || got.total != 2 * k) {
          o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s) + " gave " +
                 triple(got));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases, " + std::to_string(skipped) + " inadmissible skipped";
  return o;
}

// Arc lengths up to 3n+1 cover both readings of the length bound (arc length
// or module length at most 3n).
Outcome oracle_equivalence() {
  Outcome o;
  std::int64_t pairs = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto arcs = arcs_of_rank(n, 3 * n + 1);
    for (const ArcAnn& x : arcs) {
      for (const ArcAnn& y : arcs) {
        ++pairs;
        const IndecModule m1 = phi(x);
        const IndecModule m2 = phi(y);
        const std::int64_t tube = ext_dim_tube(m1, m2);
        const std::int64_t ar = ext_dim_ar(m1, m2);
        const std::int64_t euler = ext_dim_euler(m1, m2);
        const std::int64_t hom = hom_dim(m1, m2);
        const std::int64_t lin = hom_dim_oracle(m1, m2);
        if (tube != ar || ar != euler || hom != lin) {
          o.fail("n=" + std::to_string(n) + " " + m1.str() + " " + m2.str());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome route_agreement() {
  Outcome o;
  std::int64_t pairs = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto arcs = arcs_of_rank(n, 3 * n + 1);
    for (const ArcAnn& x : arcs) {
      for (const ArcAnn& y : arcs) {
        ++pairs;
        const CrossingReport geometric = cover_count(n, x, y);
        const CrossingReport closed = itotal(n, x, y);
        if (!geometric.same_numbers(closed)) {
          o.fail("n=" + std::to_string(n) + " " + x.str() + " " + y.str() + ": " + triple(geometric) + " vs " +
                 triple(closed));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome doubling() {
  Outcome o;
  std::int64_t pairs = 0;
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto arcs = arcs_of_rank(n, 3 * n + 1);
    for (const ArcAnn& x : arcs) {
      for (const ArcAnn& y : arcs) {
        ++pairs;
        const CrossingReport d = doubled_intersections(n, x, y);
        const CrossingReport r = itotal(n, x, y);
        if (d.pos != 2 * r.pos || d.neg != 2 * r.neg || d.total != 2 * r.total) {
          o.fail("n=" + std::to_string(n) + " " + x.str() + " " + y.str());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

// Rank-5 arrows among lengths 2..5, transcribed by hand.
const std::vector<std::array<int, 4>> kRank5Arrows = {
    {3, 8, 4, 8}, {4, 9, 0, 4}, {0, 5, 1, 5}, {1, 6, 2, 6}, {2, 7, 3, 7}, {3, 7, 3, 8}, {3, 7, 4, 7}, {4, 8, 4, 9},
    {4, 8, 0, 3}, {0, 4, 0, 5}, {0, 4, 1, 4}, {1, 5, 1, 6}, {1, 5, 2, 5}, {2, 6, 2, 7}, {2, 6, 3, 6}, {4, 7, 4, 8},
    {4, 7, 0, 2}, {0, 3, 0, 4}, {0, 3, 1, 3}, {1, 4, 1, 5}, {1, 4, 2, 4}, {2, 5, 2, 6}, {2, 5, 3, 5}, {3, 6, 3, 7},
    {3, 6, 4, 6}, {4, 6, 4, 7}, {0, 2, 0, 3}, {1, 3, 1, 4}, {2, 4, 2, 5}, {3, 5, 3, 6},
};

Outcome quiver_fidelity() {
  Outcome o;
  const TubeQuiver q = generate_window(5, 6);
  std::set<std::pair<ArcAnn, ArcAnn>> expected_rows;
  for (const auto& e : kRank5Arrows) expected_rows.insert({arc_ann(5, e[0], e[1]), arc_ann(5, e[2], e[3])});
  std::set<std::pair<ArcAnn, ArcAnn>> rows;
  for (const auto& arrow : q.arrows) {
    if (arrow.first.len() <= 5 && arrow.second.len() <= 5) rows.insert(arrow);
  }
  if (rows != expected_rows) o.fail("arrows among lengths 2..5 differ from the transcription");
  if (q.vertices.size() != 25) o.fail("expected 25 vertices, got " + std::to_string(q.vertices.size()));
  for (const ArcAnn& x : q.vertices) {
    const auto succ = q.successors(x);
    std::vector<ArcAnn> expected;
    if (x.len() > 2) expected.push_back(arc_ann(5, x.a() + 1, x.a() + x.len()));
    if (x.len() < 6) expected.emplace_back(5, x.a(), x.len() + 1);
    if (succ != expected) o.fail("successors of " + x.str());
    if (x.len() == 2 && succ.size() != 1) o.fail("bottom row " + x.str());
    if (x.len() > 2 && x.len() < 6 && succ.size() != 2) o.fail("out-degree at " + x.str());
    if (q.translate(x) != ArcAnn(5, (x.a() + 4) % 5, x.len())) o.fail("tau at " + x.str());
  }
  if (const auto v = mesh_violation(q)) o.fail("mesh fails at " + v->str());
  if (o.ok) o.detail = std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrows.size()) + " arrows";
  return o;
}

Outcome za_infinity() {
  Outcome o;
  std::int64_t pairs = 0;
  std::vector<IndecModule> mods;
  for (std::int64_t a = -8; a <= 8; ++a) {
    for (std::int64_t b = a + 2; b <= 8; ++b) mods.emplace_back(Rank::infinite(), a, b);
  }
  for (const IndecModule& m1 : mods) {
    for (const IndecModule& m2 : mods) {
      ++pairs;
      const std::int64_t tube = ext_dim_infinity(m1, m2, false);
      const std::int64_t cluster = ext_dim_infinity(m1, m2, true);
      const std::int64_t line = ext_dim_line(m1, m2);
      const std::int64_t line_cluster = line + ext_dim_line(m2, m1);
      if (tube != line || cluster != line_cluster) o.fail(m1.str() + " " + m2.str() + ": oracle disagrees");
      if (tube < 0 || tube > 1 || cluster < 0 || cluster > 2) o.fail(m1.str() + " " + m2.str() + ": out of range");
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::int64_t pairs = 0;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto arcs = arcs_of_rank(n, 18);
    for (const ArcAnn& x : arcs) {
      for (const ArcAnn& y : arcs) {
        ++pairs;
        const CrossingReport r = itotal(n, x, y);
        const std::string where = "n=" + std::to_string(n) + " " + x.str() + " " + y.str();
        if (r.pos != ineg(n, y, x)) o.fail(where + ": swap antisymmetry");
        if (!itotal(n, tau_arc(x), tau_arc(y)).same_numbers(r)) o.fail(where + ": tau invariance");
        for (std::int64_t m = -2; m <= 2; ++m) {
          const ArcU shifted = shift(canonical_lift(x), {m}, n);
          if (ipos_lifts(n, shifted, canonical_lift(y)) != r.pos || ineg_lifts(n, shifted, canonical_lift(y)) != r.neg) {
            o.fail(where + ": shift invariance");
          }
        }
        if (r.total != r.pos + r.neg) o.fail(where + ": total");
      }
    }
  }
  int code = -1;
  const json c = cli_json({"check", "--n-max", "6", "--len-max", "18", "--json"}, &code);
  if (code != kExitOk || c.is_null() || c["ok"] != true) o.fail("check exited " + std::to_string(code));
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, check exit 0";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rank-4 anchor pair", 1.0, anchor},
      {2, "powers of the loop", 5.0, cycle_powers},
      {3, "hom/ext oracle equivalence", 120.0, oracle_equivalence},
      {4, "cover count vs closed form", 120.0, route_agreement},
      {5, "doubling", 60.0, doubling},
      {6, "rank-5 quiver window", 1.0, quiver_fidelity},
      {7, "ZA_infinity", 30.0, za_infinity},
      {8, "property suite", 120.0, property_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) o.fail("too slow");
    if (!o.ok) ++failures;
    std::printf("[%s] %d %s: %s (%.3fs, limit %.0fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
