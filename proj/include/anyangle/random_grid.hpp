#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"

namespace anyangle {

// Draws are taken straight from std::mt19937_64 (its output sequence is fixed
// by the standard) and mapped by hand, so replays match across standard
// libraries. The std distributions are implementation-defined and avoided.
class replay_rng {
 public:
  explicit replay_rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // [0, 1) with 53 bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n), rejection to avoid modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive per-instance seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct random_instance {
  grid map;
  vertex start;
  cell goal_cell;
  vertex goal;
};

enum class cost_model { uniform_1_15, half_ones_1_15 };

namespace detail {

inline bool border_cell(int cx, int cy, int w, int h) {
  return cx == 0 || cy == 0 || cx == w - 1 || cy == h - 1;
}

inline random_instance finish_instance(grid g, replay_rng& rng) {
  const int w = g.width(), h = g.height();
  const cell gc{w - 1, static_cast<int>(rng.below(static_cast<std::uint64_t>(h)))};
  return {std::move(g), vertex{0, 0}, gc, vertex{gc.cx, gc.cy}};
}

}  // namespace detail

// Interior cells blocked independently; the outermost ring of cells stays free.
// Start is the SW corner of the SW cell, goal the SW corner of a random cell
// in the easternmost column.
inline random_instance generate_random_grid(int width, int height, double percent_blocked, std::uint64_t seed) {
  if (width < 1 || height < 1) throw grid_error("grid dimensions must be positive");
  if (!(percent_blocked >= 0.0 && percent_blocked < 100.0))
    throw std::invalid_argument("percent_blocked must lie in [0, 100)");
  replay_rng rng(seed);
  const double p = percent_blocked / 100.0;
  std::vector<double> costs(static_cast<std::size_t>(width) * height, 1.0);
  for (int cy = 0; cy < height; ++cy)
    for (int cx = 0; cx < width; ++cx) {
      if (detail::border_cell(cx, cy, width, height)) continue;
      if (rng.unit() < p) costs[static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * width] = infinity;
    }
  return detail::finish_instance(grid(width, height, std::move(costs)), rng);
}

// Same layout with integer costs 1..15. half_ones_1_15 picks 1 with
// probability 1/2 and otherwise 2..15 uniformly. Optional blocking applies to
// interior cells only, as above.
inline random_instance generate_cost_grid(int width, int height, cost_model model, std::uint64_t seed,
                                          double percent_blocked = 0.0) {
  if (width < 1 || height < 1) throw grid_error("grid dimensions must be positive");
  if (!(percent_blocked >= 0.0 && percent_blocked < 100.0))
    throw std::invalid_argument("percent_blocked must lie in [0, 100)");
  replay_rng rng(seed);
  const double p = percent_blocked / 100.0;
  std::vector<double> costs(static_cast<std::size_t>(width) * height, 1.0);
  for (int cy = 0; cy < height; ++cy)
    for (int cx = 0; cx < width; ++cx) {
      double c;
      if (model == cost_model::uniform_1_15)
        c = static_cast<double>(1 + rng.below(15));
      else
        c = rng.unit() < 0.5 ? 1.0 : static_cast<double>(2 + rng.below(14));
      if (p > 0.0 && !detail::border_cell(cx, cy, width, height) && rng.unit() < p) c = infinity;
      costs[static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * width] = c;
    }
  return detail::finish_instance(grid(width, height, std::move(costs)), rng);
}

inline const char* to_string(cost_model m) {
  return m == cost_model::uniform_1_15 ? "uniform_1_15" : "half_ones_1_15";
}

inline cost_model parse_cost_model(const std::string& s) {
  if (s == "uniform_1_15") return cost_model::uniform_1_15;
  if (s == "half_ones_1_15") return cost_model::half_ones_1_15;
  throw std::invalid_argument("unknown cost model '" + s + "'");
}

}  // namespace anyangle
