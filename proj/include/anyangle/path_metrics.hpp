#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grid.hpp"

namespace anyangle {

inline double path_length(const std::vector<vertex>& path) {
  double len = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) len += distance(path[i - 1], path[i]);
  return len;
}

// Interior vertices where the direction changes. Coordinates are integers so
// the cross product is exact; collinear vertices do not count.
inline std::size_t heading_changes(const std::vector<vertex>& path) {
  std::size_t n = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const std::int64_t ax = path[i].x - path[i - 1].x, ay = path[i].y - path[i - 1].y;
    const std::int64_t bx = path[i + 1].x - path[i].x, by = path[i + 1].y - path[i].y;
    if (ax * by - ay * bx != 0) ++n;
  }
  return n;
}

}  // namespace anyangle
