#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "grid.hpp"

namespace anyangle {

// Integer Bresenham-style traversal. (sx - 1) / 2 truncates toward zero, so the
// cell offset is 0 heading east/north and -1 heading west/south.
inline bool line_of_sight(const grid& g, vertex s, vertex t) {
  int x0 = s.x, y0 = s.y;
  const int x1 = t.x, y1 = t.y;
  int dy = y1 - y0, dx = x1 - x0;
  int f = 0;
  int sy, sx;
  if (dy < 0) { dy = -dy; sy = -1; } else { sy = 1; }
  if (dx < 0) { dx = -dx; sx = -1; } else { sx = 1; }
  const int ox = (sx - 1) / 2, oy = (sy - 1) / 2;
  if (dx >= dy) {
    while (x0 != x1) {
      f += dy;
      if (f >= dx) {
        if (g.is_blocked(x0 + ox, y0 + oy)) return false;
        y0 += sy;
        f -= dx;
      }
      if (f != 0 && g.is_blocked(x0 + ox, y0 + oy)) return false;
      if (dy == 0 && g.is_blocked(x0 + ox, y0) && g.is_blocked(x0 + ox, y0 - 1)) return false;
      x0 += sx;
    }
  } else {
    while (y0 != y1) {
      f += dx;
      if (f >= dy) {
        if (g.is_blocked(x0 + ox, y0 + oy)) return false;
        x0 += sx;
        f -= dy;
      }
      if (f != 0 && g.is_blocked(x0 + ox, y0 + oy)) return false;
      if (dx == 0 && g.is_blocked(x0, y0 + oy) && g.is_blocked(x0 - 1, y0 + oy)) return false;
      y0 += sy;
    }
  }
  return true;
}

namespace detail {

using rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const rational& q) {
  const auto n = q.numerator(), d = q.denominator();  // d > 0
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

// Does the closed segment s + u*(t-s), u in [0,1], meet the open square of cell c?
// Only called for segments with dx != 0 and dy != 0.
inline bool meets_open_cell(vertex s, vertex t, int cx, int cy) {
  const std::int64_t dx = t.x - s.x, dy = t.y - s.y;
  rational ax(cx - s.x, dx), bx(cx + 1 - s.x, dx);
  rational ay(cy - s.y, dy), by(cy + 1 - s.y, dy);
  if (bx < ax) std::swap(ax, bx);
  if (by < ay) std::swap(ay, by);
  const rational lo = std::max(ax, ay), hi = std::min(bx, by);
  return lo < hi && hi > rational(0) && lo < rational(1);
}

}  // namespace detail

// Reference answer in exact arithmetic: the segment may not enter the open
// interior of a blocked cell, nor run along an edge shared by two blocked cells.
// Off-grid cells count as blocked. Meant for tests, not for search.
inline bool line_of_sight_exact(const grid& g, vertex s, vertex t) {
  if (s == t) return true;
  if (s.x == t.x) {
    const int lo = std::min(s.y, t.y), hi = std::max(s.y, t.y);
    for (int y = lo; y < hi; ++y)
      if (g.is_blocked(s.x - 1, y) && g.is_blocked(s.x, y)) return false;
    return true;
  }
  if (s.y == t.y) {
    const int lo = std::min(s.x, t.x), hi = std::max(s.x, t.x);
    for (int x = lo; x < hi; ++x)
      if (g.is_blocked(x, s.y - 1) && g.is_blocked(x, s.y)) return false;
    return true;
  }
  using detail::rational;
  const int xlo = std::min(s.x, t.x), xhi = std::max(s.x, t.x);
  const std::int64_t dx = t.x - s.x, dy = t.y - s.y;
  for (int cx = xlo; cx < xhi; ++cx) {
    // y on the segment at both sides of the column
    const rational ya = rational(s.y) + rational(dy * (cx - s.x), dx);
    const rational yb = rational(s.y) + rational(dy * (cx + 1 - s.x), dx);
    const rational ymin = std::min(ya, yb), ymax = std::max(ya, yb);
    const auto cy0 = detail::floor_of(ymin), cy1 = detail::floor_of(ymax);
    for (auto cy = cy0; cy <= cy1; ++cy) {
      if (!g.is_blocked(cx, static_cast<int>(cy))) continue;
      if (detail::meets_open_cell(s, t, cx, static_cast<int>(cy))) return false;
    }
  }
  return true;
}

struct segment_piece {
  double length = 0.0;
  double cell_cost = 0.0;
};

struct segment_cost_result {
  double total = 0.0;
  std::vector<segment_piece> pieces;
};

// Clips s->t at every gridline crossing and charges each piece the cost of the
// cell it lies in; a piece running along a gridline pays the cheaper neighbour.
// nullopt means the segment is blocked.
inline std::optional<segment_cost_result> segment_cost(const grid& g, vertex s, vertex t) {
  if (!line_of_sight(g, s, t)) return std::nullopt;
  segment_cost_result out;
  if (s == t) return out;

  const double dx = t.x - s.x, dy = t.y - s.y;
  const double len = std::hypot(dx, dy);
  std::vector<double> us{0.0, 1.0};
  for (int x = std::min(s.x, t.x) + 1; x < std::max(s.x, t.x); ++x) us.push_back((x - s.x) / dx);
  for (int y = std::min(s.y, t.y) + 1; y < std::max(s.y, t.y); ++y) us.push_back((y - s.y) / dy);
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end(), [](double a, double b) { return b - a <= 1e-12; }), us.end());
  if (us.back() != 1.0) us.back() = 1.0;

  auto on_line = [](double v) { return std::abs(v - std::round(v)) <= 1e-12; };
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    const double um = 0.5 * (us[i] + us[i + 1]);
    const double mx = s.x + um * dx, my = s.y + um * dy;
    double c;
    if (on_line(mx)) {
      const int x = static_cast<int>(std::lround(mx)), cy = static_cast<int>(std::floor(my));
      c = std::min(g.cost(x - 1, cy), g.cost(x, cy));
    } else if (on_line(my)) {
      const int y = static_cast<int>(std::lround(my)), cx = static_cast<int>(std::floor(mx));
      c = std::min(g.cost(cx, y - 1), g.cost(cx, y));
    } else {
      c = g.cost(static_cast<int>(std::floor(mx)), static_cast<int>(std::floor(my)));
    }
    const double piece = (us[i + 1] - us[i]) * len;
    out.pieces.push_back({piece, c});
    out.total += piece * c;
  }
  return out;
}

// Neighbour offsets in counterclockwise order starting east.
inline const std::vector<vertex>& neighbor_offsets(branching_factor bf) {
  static const std::vector<vertex> four{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  static const std::vector<vertex> eight{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  static const std::vector<vertex> sixteen{{1, 0},   {2, 1},   {1, 1},   {1, 2},  {0, 1},  {-1, 2},
                                           {-1, 1},  {-2, 1},  {-1, 0},  {-2, -1}, {-1, -1}, {-1, -2},
                                           {0, -1},  {1, -2},  {1, -1},  {2, -1}};
  switch (bf) {
    case branching_factor::four: return four;
    case branching_factor::eight: return eight;
    case branching_factor::sixteen: return sixteen;
  }
  return eight;
}

template <class F>
void for_each_visible_neighbor(const grid& g, vertex s, branching_factor bf, F&& f) {
  for (const vertex d : neighbor_offsets(bf)) {
    const vertex n{s.x + d.x, s.y + d.y};
    if (g.in_range(n) && line_of_sight(g, s, n)) f(n);
  }
}

inline std::vector<vertex> neighbors_vis(const grid& g, vertex s, branching_factor bf = branching_factor::eight) {
  std::vector<vertex> out;
  for_each_visible_neighbor(g, s, bf, [&](vertex n) { out.push_back(n); });
  return out;
}

}  // namespace anyangle
