#pragma once

#include <string>
#include <vector>

#include "tubes/arcs.hpp"

namespace tubes {

enum class View { Cover, Annulus };

struct DrawOptions {
  View view = View::Cover;
  bool monochrome = false;
};

/// Standalone SVG of one or two arcs of A(n). In the cover view the strip is
/// drawn with the sigma-translates of the longer arc that meet the shorter
/// one; in the annulus view the same picture is wrapped by
/// (x, y) -> (angle 2 pi x / n, radius 1 - 0.6 y). Crossings are marked with
/// circles (positive) and squares (negative). Output is byte-stable.
std::string draw_svg(const std::vector<ArcAnn>& arcs, const DrawOptions& options);

}  // namespace tubes
