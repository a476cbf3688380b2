#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tubes/intersections.hpp"

namespace tubes {

struct CheckOptions {
  std::int64_t n_max = 6;
  std::int64_t len_max = 18;
  /// Endpoint bound for the ZA_infinity sweep: arcs [a,b] with -B <= a < b <= B.
  std::int64_t infinity_bound = 8;
  SignConvention convention = SignConvention::Standard;
};

struct CheckResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// First failing instance in enumeration order.
  std::optional<std::string> counterexample;
};

struct CheckSummary {
  std::vector<CheckResult> results;

  bool ok() const;
  std::int64_t total_failed() const;
  const CheckResult* first_failure() const;
};

/// Accepted ranges: 1 <= n_max <= 8, 2 <= len_max <= 32, 2 <= infinity_bound <= 16.
void validate(const CheckOptions& options);

/// Runs every property sweep: the rank-4 anchor pair first, then the
/// arc-level identities, route and oracle agreement, doubling, quiver mesh
/// symmetry and the ZA_infinity case. Ranks 1..n_max, arc lengths 2..len_max.
/// Throws TubeError(InvalidArgument) on bounds outside the accepted ranges.
CheckSummary run_checks(const CheckOptions& options);

}  // namespace tubes
