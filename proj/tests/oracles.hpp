#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the closed forms they are compared against.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t search_radius(std::int64_t n, std::initializer_list<std::int64_t> coords) {
  std::int64_t r = 0;
  for (auto c : coords) r += std::abs(c);
  return r / n + 5;
}

/// #{m : lo < x + m n < hi} by enumeration.
inline std::int64_t count_translates_inside(std::int64_t n, std::int64_t x, std::int64_t lo, std::int64_t hi) {
  const std::int64_t radius = search_radius(n, {x, lo, hi});
  std::int64_t count = 0;
  for (std::int64_t m = -radius; m <= radius; ++m) {
    if (lo < x + m * n && x + m * n < hi) ++count;
  }
  return count;
}

/// Positive/negative counts for lifts [a,b], [c,d], choosing the formula by
/// length and swapping when the second arc is shorter.
inline std::pair<std::int64_t, std::int64_t> signed_counts(std::int64_t n, std::int64_t a, std::int64_t b,
                                                           std::int64_t c, std::int64_t d) {
  if (d - c >= b - a) return {count_translates_inside(n, c, a, b), count_translates_inside(n, d, a, b)};
  const auto [p, q] = signed_counts(n, c, d, a, b);
  return {q, p};
}

/// Arrows of the arc quiver between arcs with lengths in [2, max_len]: all
/// projected pairs of lifts [a,b] -> [a+1,b] or [a,b+1], with lifts drawn
/// from a generous range and duplicates collapsed.
inline std::set<std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>>
arc_quiver_arrows(std::int64_t n, std::int64_t max_len) {
  auto reduce = [n](std::int64_t a, std::int64_t b) {
    const std::int64_t r = ((a % n) + n) % n;
    return std::pair{r, b - a + r};
  };
  std::set<std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>> out;
  for (std::int64_t a = -3 * n; a <= 3 * n; ++a) {
    for (std::int64_t b = a + 2; b <= a + max_len; ++b) {
      for (std::int64_t c = -3 * n; c <= 3 * n + 1; ++c) {
        for (std::int64_t d = c + 2; d <= c + max_len; ++d) {
          if ((c == a + 1 && d == b) || (c == a && d == b + 1)) out.insert({reduce(a, b), reduce(c, d)});
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
