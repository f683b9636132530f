#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "grid.hpp"

namespace anyangle {

// Goal distance on an obstacle-free 8-connected grid.
inline double octile_h(vertex s, vertex goal) {
  const int dx = std::abs(s.x - goal.x), dy = std::abs(s.y - goal.y);
  const int lo = std::min(dx, dy), hi = std::max(dx, dy);
  return std::sqrt(2.0) * lo + (hi - lo);
}

inline double straight_line_h(vertex s, vertex goal, double w = 1.0) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("heuristic weight must lie in [0, 1]");
  return w * distance(s, goal);
}

}  // namespace anyangle
