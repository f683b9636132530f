#pragma once

// Reference implementations that share no code with the planners.

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <tuple>
#include <vector>

#include <anyangle/grid.hpp>
#include <anyangle/line_of_sight.hpp>

namespace oracles {

using anyangle::grid;
using anyangle::vertex;

// Is the move between adjacent vertices a and b (8-neighbourhood) usable?
// Decided from cell flags directly, without the LOS kernel.
inline bool grid_edge_open(const grid& g, vertex a, vertex b) {
  const int dx = b.x - a.x, dy = b.y - a.y;
  if (dx != 0 && dy != 0) {
    // the one cell the diagonal crosses
    return !g.is_blocked(std::min(a.x, b.x), std::min(a.y, b.y));
  }
  if (dy == 0) {
    const int cx = std::min(a.x, b.x);
    return !(g.is_blocked(cx, a.y - 1) && g.is_blocked(cx, a.y));
  }
  const int cy = std::min(a.y, b.y);
  return !(g.is_blocked(a.x - 1, cy) && g.is_blocked(a.x, cy));
}

inline std::vector<char> flood_fill(const grid& g, vertex s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<vertex> stack{s};
  seen[g.index(s)] = 1;
  while (!stack.empty()) {
    const vertex v = stack.back();
    stack.pop_back();
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        if (!dx && !dy) continue;
        const vertex n{v.x + dx, v.y + dy};
        if (!g.in_range(n) || seen[g.index(n)] || !grid_edge_open(g, v, n)) continue;
        seen[g.index(n)] = 1;
        stack.push_back(n);
      }
  }
  return seen;
}

inline bool reachable(const grid& g, vertex s, vertex t) { return flood_fill(g, s)[g.index(t)] != 0; }

// Plain Dijkstra over the 8-connected grid graph.
inline double grid_dijkstra(const grid& g, vertex s, vertex t) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(g.vertex_count(), inf);
  using item = std::pair<double, std::size_t>;
  std::priority_queue<item, std::vector<item>, std::greater<>> pq;
  d[g.index(s)] = 0.0;
  pq.push({0.0, g.index(s)});
  while (!pq.empty()) {
    const auto [dv, i] = pq.top();
    pq.pop();
    if (dv > d[i]) continue;
    const vertex v = g.vertex_at(i);
    if (v == t) return dv;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        if (!dx && !dy) continue;
        const vertex n{v.x + dx, v.y + dy};
        if (!g.in_range(n) || !grid_edge_open(g, v, n)) continue;
        const double nd = dv + std::sqrt(static_cast<double>(dx * dx + dy * dy));
        if (nd < d[g.index(n)]) {
          d[g.index(n)] = nd;
          pq.push({nd, g.index(n)});
        }
      }
  }
  return inf;
}

// Walks the segment in `samples` equal steps and charges each step at the cost
// of the cell containing its midpoint (cheaper side when on a gridline).
inline double sampled_segment_cost(const grid& g, vertex s, vertex t, int samples = 100000) {
  const double dx = t.x - s.x, dy = t.y - s.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return 0.0;
  const double step = len / samples;
  auto on_line = [](double v) { return std::abs(v - std::round(v)) < 1e-12; };
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double u = (i + 0.5) / samples;
    const double x = s.x + u * dx, y = s.y + u * dy;
    double c;
    if (on_line(x))
      c = std::min(g.cost(static_cast<int>(std::round(x)) - 1, static_cast<int>(std::floor(y))),
                   g.cost(static_cast<int>(std::round(x)), static_cast<int>(std::floor(y))));
    else if (on_line(y))
      c = std::min(g.cost(static_cast<int>(std::floor(x)), static_cast<int>(std::round(y)) - 1),
                   g.cost(static_cast<int>(std::floor(x)), static_cast<int>(std::round(y))));
    else
      c = g.cost(static_cast<int>(std::floor(x)), static_cast<int>(std::floor(y)));
    total += step * c;
  }
  return total;
}

// Textbook paired t statistic, computed two-pass from the raw differences.
inline double textbook_paired_t(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double sum = 0, sumsq = 0;
  for (std::size_t i = 0; i < n; ++i) sum += static_cast<long double>(a[i]) - b[i];
  const long double mean = sum / n;
  for (std::size_t i = 0; i < n; ++i) {
    const long double d = static_cast<long double>(a[i]) - b[i] - mean;
    sumsq += d * d;
  }
  const long double sd = std::sqrt(sumsq / (n - 1));
  return static_cast<double>(mean / (sd / std::sqrt(static_cast<long double>(n))));
}

// Grid with each cell blocked with probability p.
inline grid random_blocked(int w, int h, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<anyangle::cell> blocked;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (coin(rng)) blocked.push_back({x, y});
  return anyangle::make_grid(w, h, blocked);
}

inline vertex random_vertex(const grid& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> xs(0, g.width()), ys(0, g.height());
  return {xs(rng), ys(rng)};
}

}  // namespace oracles
