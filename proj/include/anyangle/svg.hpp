#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"

namespace anyangle {

struct svg_path {
  std::vector<vertex> points;
  std::string color;  // empty: next palette colour
  bool dashed = false;
};

struct render_spec {
  int cell_pixel_size = 24;
  bool gridlines = true;
  std::vector<vertex> expanded;  // optional overlay of expanded vertices
};

inline constexpr const char* blocked_fill = "#808080";

namespace detail {

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f4fd8", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#17becf"};
  return colors[i % (sizeof colors / sizeof colors[0])];
}

// Costs 1..15 shade from white towards dark grey; blocked is its own colour.
inline std::string cell_fill(double cost) {
  if (cost == infinity) return blocked_fill;
  if (cost <= 1.0) return "#ffffff";
  const double t = std::min(1.0, (cost - 1.0) / 14.0);
  const int level = static_cast<int>(std::lround(235.0 - t * 120.0));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

}  // namespace detail

// North is up: vertex (x, y) maps to (m + x*c, m + (H - y)*c) with a half-cell margin m.
inline std::string render_svg(const grid& g, const std::vector<svg_path>& paths, const render_spec& spec = {}) {
  const int c = spec.cell_pixel_size;
  if (c < 2) throw std::invalid_argument("cell_pixel_size must be at least 2");
  const int m = c / 2;
  const int W = g.width(), H = g.height();
  const int pw = W * c + 2 * m, ph = H * c + 2 * m;
  auto px = [&](int x) { return m + x * c; };
  auto py = [&](int y) { return m + (H - y) * c; };
  for (const auto& p : paths)
    for (const vertex v : p.points)
      if (!g.in_range(v)) throw std::invalid_argument("render_svg: path vertex outside the grid");

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(pw) + "\" height=\"" +
       std::to_string(ph) + "\" viewBox=\"0 0 " + std::to_string(pw) + " " + std::to_string(ph) + "\">\n";
  s += "<g id=\"cells\" stroke=\"none\">\n";
  for (int cy = H - 1; cy >= 0; --cy)
    for (int cx = 0; cx < W; ++cx)
      s += "<rect x=\"" + std::to_string(px(cx)) + "\" y=\"" + std::to_string(py(cy + 1)) + "\" width=\"" +
           std::to_string(c) + "\" height=\"" + std::to_string(c) + "\" fill=\"" + detail::cell_fill(g.cost(cx, cy)) +
           "\"/>\n";
  s += "</g>\n";
  if (spec.gridlines) {
    s += "<g id=\"gridlines\" stroke=\"#b0b0b0\" stroke-width=\"1\">\n";
    for (int x = 0; x <= W; ++x)
      s += "<line x1=\"" + std::to_string(px(x)) + "\" y1=\"" + std::to_string(py(H)) + "\" x2=\"" +
           std::to_string(px(x)) + "\" y2=\"" + std::to_string(py(0)) + "\"/>\n";
    for (int y = 0; y <= H; ++y)
      s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(y)) + "\" x2=\"" +
           std::to_string(px(W)) + "\" y2=\"" + std::to_string(py(y)) + "\"/>\n";
    s += "</g>\n";
  }
  if (!spec.expanded.empty()) {
    s += "<g id=\"expanded\" fill=\"#ff0000\" fill-opacity=\"0.5\">\n";
    const int r = std::max(1, c / 6);
    for (const vertex v : spec.expanded)
      s += "<circle cx=\"" + std::to_string(px(v.x)) + "\" cy=\"" + std::to_string(py(v.y)) + "\" r=\"" +
           std::to_string(r) + "\"/>\n";
    s += "</g>\n";
  }
  s += "<g id=\"paths\" fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    std::string pts;
    for (const vertex v : p.points) {
      if (!pts.empty()) pts += ' ';
      pts += std::to_string(px(v.x)) + "," + std::to_string(py(v.y));
    }
    s += "<polyline points=\"" + pts + "\" stroke=\"" + (p.color.empty() ? detail::palette(i) : p.color) +
         "\" stroke-width=\"" + std::to_string(std::max(1, c / 8)) + "\"" +
         (p.dashed ? " stroke-dasharray=\"" + std::to_string(c / 3) + "," + std::to_string(c / 4) + "\"" : "") +
         "/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace anyangle
