#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "grid.hpp"
#include "line_of_sight.hpp"

namespace anyangle {

// Start, goal and every in-range corner of a (real) blocked cell, deduplicated,
// in grid-index order with start and goal first.
inline std::vector<vertex> visibility_vertices(const grid& g, vertex start, vertex goal) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<vertex> out;
  auto add = [&](vertex v) {
    if (!g.in_range(v)) return;
    auto& flag = seen[g.index(v)];
    if (flag) return;
    flag = 1;
    out.push_back(v);
  };
  add(start);
  add(goal);
  for (int cy = 0; cy < g.height(); ++cy)
    for (int cx = 0; cx < g.width(); ++cx)
      if (g.is_blocked(cx, cy))
        for (const vertex v : corners(cell{cx, cy})) add(v);
  return out;
}

struct visibility_graph {
  std::vector<vertex> vertices;
  // adjacency[i] holds (j, length) for every j with line of sight.
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adjacency) n += a.size();
    return n / 2;
  }
};

// All pairs, checked one by one.
inline visibility_graph build_visibility_graph(const grid& g, vertex start, vertex goal) {
  visibility_graph vg;
  vg.vertices = visibility_vertices(g, start, goal);
  vg.adjacency.resize(vg.vertices.size());
  for (std::size_t i = 0; i < vg.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vg.vertices.size(); ++j)
      if (line_of_sight(g, vg.vertices[i], vg.vertices[j])) {
        const double d = distance(vg.vertices[i], vg.vertices[j]);
        vg.adjacency[i].push_back({j, d});
        vg.adjacency[j].push_back({i, d});
      }
  return vg;
}

// Same edge set, but an edge is only tested when one of its ends is expanded.
// A* touches a small fraction of the vertices, so this is what the planner uses.
struct lazy_visibility_graph {
  const grid* map;
  std::vector<vertex> vertices;

  lazy_visibility_graph(const grid& g, vertex start, vertex goal)
      : map(&g), vertices(visibility_vertices(g, start, goal)) {}

  template <class F>
  void for_each_neighbor(vertex s, F&& f) const {
    for (const vertex v : vertices)
      if (v != s && line_of_sight(*map, s, v)) f(v);
  }
};

}  // namespace anyangle
