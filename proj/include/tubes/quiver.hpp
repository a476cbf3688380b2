#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubes/arcs.hpp"

namespace tubes {

/// Finite window of a stable translation quiver whose vertices are arcs
/// (ArcAnn for a tube, ArcU for ZA_infinity). Vertices are kept sorted by
/// (length, start) so iteration order is stable.
template <typename Arc>
struct TranslationQuiver {
  std::vector<Arc> vertices;
  std::set<std::pair<Arc, Arc>> arrows;
  std::map<Arc, Arc> tau;  // partial: only where the image is in the window
  std::int64_t max_len = 0;

  bool contains(const Arc& x) const;
  std::vector<Arc> successors(const Arc& x) const;
  std::vector<Arc> predecessors(const Arc& x) const;
  std::optional<Arc> translate(const Arc& x) const;
  /// Vertices whose whole mesh lies inside the window: the upward
  /// neighbour, tau(x) and tau^-1(x) are all present.
  bool is_interior(const Arc& x) const;
};

using TubeQuiver = TranslationQuiver<ArcAnn>;
using LineQuiver = TranslationQuiver<ArcU>;

/// All arcs of A(n) with 2 <= len <= max_len, the arrows between them and
/// the rotation tau. Throws TubeError(InvalidArgument) if max_len < 2.
TubeQuiver generate_window(std::int64_t n, std::int64_t max_len);

/// Arcs [a,b] of the strip with a_min <= a <= a_max and 2 <= b - a <= max_len.
LineQuiver generate_infinity_window(std::int64_t a_min, std::int64_t a_max, std::int64_t max_len);

/// First interior vertex violating the mesh condition
/// pred(x) = tau(succ(x)), if any.
std::optional<ArcAnn> mesh_violation(const TubeQuiver& q);
std::optional<ArcU> mesh_violation(const LineQuiver& q);

/// Graphviz digraph: solid edges are arrows, dashed edges go y -> tau(y).
std::string to_dot(const TubeQuiver& q);
std::string to_dot(const LineQuiver& q);

}  // namespace tubes
