#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyangle {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Vertices sit on cell corners. x grows east, y grows north.
struct vertex {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(vertex, vertex) = default;
};

// Cell (cx, cy) covers [cx, cx+1] x [cy, cy+1].
struct cell {
  int cx = 0;
  int cy = 0;
  friend constexpr auto operator<=>(cell, cell) = default;
};

inline double distance(vertex a, vertex b) {
  return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
}

inline std::int64_t squared_distance(vertex a, vertex b) {
  const std::int64_t dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

enum class branching_factor { four = 4, eight = 8, sixteen = 16 };

inline branching_factor to_branching_factor(int n) {
  switch (n) {
    case 4: return branching_factor::four;
    case 8: return branching_factor::eight;
    case 16: return branching_factor::sixteen;
  }
  throw std::invalid_argument("branching factor must be 4, 8 or 16, got " + std::to_string(n));
}

class grid_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class grid {
 public:
  // All cells cost 1.
  grid(int width, int height) : grid(width, height, std::vector<double>()) {}

  // costs: row-major, south row first (index cx + cy*width). Empty means all 1.
  grid(int width, int height, std::vector<double> costs) : w_(width), h_(height), cost_(std::move(costs)) {
    if (w_ < 1 || h_ < 1)
      throw grid_error("grid dimensions must be positive");
    const auto n = static_cast<std::size_t>(w_) * static_cast<std::size_t>(h_);
    if (cost_.empty())
      cost_.assign(n, 1.0);
    if (cost_.size() != n)
      throw grid_error("cost vector has " + std::to_string(cost_.size()) + " entries, expected " + std::to_string(n));
    pad_.assign(static_cast<std::size_t>(w_ + 2) * static_cast<std::size_t>(h_ + 2), 1);
    uniform_ = true;
    for (int cy = 0; cy < h_; ++cy)
      for (int cx = 0; cx < w_; ++cx) {
        const double c = cost_[idx(cx, cy)];
        if (std::isnan(c) || c < 1.0)
          throw grid_error("cell (" + std::to_string(cx) + "," + std::to_string(cy) + ") has cost below 1");
        if (c == infinity) {
          ++blocked_;
        } else {
          pad_[pidx(cx, cy)] = 0;
          if (c != 1.0) uniform_ = false;
        }
      }
  }

  int width() const { return w_; }
  int height() const { return h_; }

  bool in_range(cell c) const { return c.cx >= 0 && c.cy >= 0 && c.cx < w_ && c.cy < h_; }
  bool in_range(vertex v) const { return v.x >= 0 && v.y >= 0 && v.x <= w_ && v.y <= h_; }

  // Anything off the grid reads as blocked.
  bool is_blocked(int cx, int cy) const {
    if (static_cast<unsigned>(cx + 1) >= static_cast<unsigned>(w_ + 2) ||
        static_cast<unsigned>(cy + 1) >= static_cast<unsigned>(h_ + 2))
      return true;
    return pad_[pidx(cx, cy)] != 0;
  }
  bool is_blocked(cell c) const { return is_blocked(c.cx, c.cy); }

  double cost(int cx, int cy) const {
    if (!in_range(cell{cx, cy})) return infinity;
    return cost_[idx(cx, cy)];
  }
  double cost(cell c) const { return cost(c.cx, c.cy); }

  // True iff every unblocked cell costs exactly 1.
  bool uniform() const { return uniform_; }
  std::size_t blocked_count() const { return blocked_; }

  std::size_t vertex_count() const {
    return static_cast<std::size_t>(w_ + 1) * static_cast<std::size_t>(h_ + 1);
  }
  std::size_t index(vertex v) const {
    return static_cast<std::size_t>(v.x) + static_cast<std::size_t>(v.y) * static_cast<std::size_t>(w_ + 1);
  }
  vertex vertex_at(std::size_t i) const {
    const auto row = static_cast<std::size_t>(w_ + 1);
    return {static_cast<int>(i % row), static_cast<int>(i / row)};
  }

  const std::vector<double>& costs() const { return cost_; }

 private:
  std::size_t idx(int cx, int cy) const {
    return static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * static_cast<std::size_t>(w_);
  }
  std::size_t pidx(int cx, int cy) const {
    return static_cast<std::size_t>(cx + 1) + static_cast<std::size_t>(cy + 1) * static_cast<std::size_t>(w_ + 2);
  }

  int w_, h_;
  std::vector<double> cost_;
  std::vector<std::uint8_t> pad_;  // blocked flags with a one-cell frame of virtual blocked cells
  std::size_t blocked_ = 0;
  bool uniform_ = true;
};

inline grid make_grid(int width, int height, const std::vector<cell>& blocked = {}) {
  if (width < 1 || height < 1)
    throw grid_error("grid dimensions must be positive");
  std::vector<double> costs(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 1.0);
  for (const cell c : blocked) {
    if (c.cx < 0 || c.cy < 0 || c.cx >= width || c.cy >= height)
      throw grid_error("blocked cell (" + std::to_string(c.cx) + "," + std::to_string(c.cy) + ") out of range");
    costs[static_cast<std::size_t>(c.cx) + static_cast<std::size_t>(c.cy) * width] = infinity;
  }
  return grid(width, height, std::move(costs));
}

// Cells missing from the map cost 1; infinity marks a blocked cell.
inline grid make_grid(int width, int height, const std::map<cell, double>& cost_map) {
  if (width < 1 || height < 1)
    throw grid_error("grid dimensions must be positive");
  std::vector<double> costs(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 1.0);
  for (const auto& [c, v] : cost_map) {
    if (c.cx < 0 || c.cy < 0 || c.cx >= width || c.cy >= height)
      throw grid_error("cell (" + std::to_string(c.cx) + "," + std::to_string(c.cy) + ") out of range");
    costs[static_cast<std::size_t>(c.cx) + static_cast<std::size_t>(c.cy) * width] = v;
  }
  return grid(width, height, std::move(costs));
}

inline bool is_blocked(const grid& g, cell c) { return g.is_blocked(c); }

// SW, SE, NW, NE.
inline std::array<vertex, 4> corners(cell c) {
  return {vertex{c.cx, c.cy}, vertex{c.cx + 1, c.cy}, vertex{c.cx, c.cy + 1}, vertex{c.cx + 1, c.cy + 1}};
}

// The four cells having s as a corner: SW, SE, NW, NE of s.
inline std::array<cell, 4> incident_cells(vertex s) {
  return {cell{s.x - 1, s.y - 1}, cell{s.x, s.y - 1}, cell{s.x - 1, s.y}, cell{s.x, s.y}};
}

// Real (in-range) blocked cells only; the virtual frame is not reported.
inline std::vector<cell> adjacent_blocked_cells(const grid& g, vertex s) {
  std::vector<cell> out;
  for (const cell c : incident_cells(s))
    if (g.in_range(c) && g.is_blocked(c)) out.push_back(c);
  return out;
}

}  // namespace anyangle
