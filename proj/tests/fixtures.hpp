#pragma once

// Small hand-built grids used by the trace tests.
//
// Labels follow the figures: the letter is the row counted from the north
// (A = top row of vertices), the number is the column counted from the west
// (1 = x 0). With `rows` vertex rows and an optional unblocked margin of
// `margin` cells around the drawn area,
//   label "Ln" -> vertex (n - 1 + margin, rows - 1 - (L - 'A') + margin).
// A cell is named by its four corners, e.g. "A2-A3-B3-B2"; it is the cell
// whose SW corner is the minimum of the four.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <anyangle/anyangle.hpp>

namespace fixtures {

using anyangle::cell;
using anyangle::grid;
using anyangle::vertex;

struct frame {
  int rows;
  int margin = 0;

  vertex v(const std::string& label) const {
    const int r = label[0] - 'A';
    const int n = std::stoi(label.substr(1));
    return {n - 1 + margin, rows - 1 - r + margin};
  }
  std::string name(vertex p) const {
    const int r = rows - 1 - (p.y - margin);
    return std::string(1, static_cast<char>('A' + r)) + std::to_string(p.x + 1 - margin);
  }
  cell c(const std::string& four) const {
    std::stringstream in(four);
    std::string part;
    int x = 1 << 30, y = 1 << 30;
    while (std::getline(in, part, '-')) {
      const vertex p = v(part);
      x = std::min(x, p.x);
      y = std::min(y, p.y);
    }
    return {x, y};
  }
  std::vector<std::string> names(const std::vector<vertex>& ps) const {
    std::vector<std::string> out;
    for (const vertex p : ps) out.push_back(name(p));
    return out;
  }
};

struct figure {
  frame f;
  grid map;
  vertex start, goal;
};

// Three vertex rows A..C, columns 1..5; the blocked cell A2-A3-B3-B2.
inline figure fig8() {
  const frame f{3};
  return {f, anyangle::make_grid(4, 2, {f.c("A2-A3-B3-B2")}), f.v("A4"), f.v("C1")};
}

// The same picture inside a one-cell unblocked margin, so that off-grid cells
// play no part in the angle ranges.
inline figure fig8_margin() {
  const frame f{3, 1};
  return {f, anyangle::make_grid(6, 4, {f.c("A2-A3-B3-B2")}), f.v("A4"), f.v("C1")};
}

// Rows A..D, columns 1..6; blocked cell B4-B5-C5-C4.
inline figure fig10() {
  const frame f{4};
  return {f, anyangle::make_grid(5, 3, {f.c("B4-B5-C5-C4")}), f.v("A1"), f.v("D6")};
}

// Rows A..E, columns 1..9. E1 sees B9 directly, but no neighbour of B9 sees E1.
inline figure fig9a() {
  const frame f{5};
  return {f, anyangle::make_grid(8, 4, {{3, 0}, {3, 2}, {4, 0}, {4, 2}}), f.v("E1"), f.v("B9")};
}

// Rows A..D, columns 1..8; a two-cell wall in column 6. The query runs to C7;
// the interesting vertex is D4, read off the parent pointers.
inline figure fig14() {
  const frame f{4};
  return {f, anyangle::make_grid(7, 3, {{5, 0}, {5, 1}}), f.v("B1"), f.v("C7")};
}

// Rows A..E, columns 1..10.
inline figure fig22() {
  const frame f{5};
  return {f, anyangle::make_grid(9, 4, {{2, 1}, {5, 2}, {7, 2}, {7, 3}, {8, 3}}), f.v("E1"), f.v("B9")};
}

// Rows A..C, columns 1..5, nothing blocked.
inline figure fig19() {
  const frame f{3};
  return {f, anyangle::make_grid(4, 2), f.v("C1"), f.v("A5")};
}

// Rows A..D, columns 1..6; blocked cell B2-B3-C3-C2.
inline figure fig3() {
  const frame f{4};
  return {f, anyangle::make_grid(5, 3, {f.c("B2-B3-C3-C2")}), f.v("C1"), f.v("B6")};
}

// Rows A..E, columns 1..7; blocked cell B4-B5-C5-C4.
inline figure fig1() {
  const frame f{5};
  return {f, anyangle::make_grid(6, 4, {f.c("B4-B5-C5-C4")}), f.v("E1"), f.v("A7")};
}

inline anyangle::planner_config config(anyangle::algorithm a) {
  anyangle::planner_config c;
  c.algo = a;
  return c;
}

}  // namespace fixtures
