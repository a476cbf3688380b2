#pragma once

#include <doctest.h>

#include <ostream>

#include "tubes/arcs.hpp"

namespace tubes {

inline std::ostream& operator<<(std::ostream& os, const ArcU& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const ArcAnn& x) { return os << x.str(); }

}  // namespace tubes
