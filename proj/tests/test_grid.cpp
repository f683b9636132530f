#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"

using namespace anyangle;

TEST(Grid, EmptyGridIsFree) {
  const grid g = make_grid(3, 3);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) EXPECT_FALSE(is_blocked(g, {x, y}));
  EXPECT_TRUE(g.uniform());
  EXPECT_EQ(g.blocked_count(), 0u);
}

TEST(Grid, SingleBlockedCellReadsBack) {
  const grid g = make_grid(10, 10, {{1, 1}});
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) EXPECT_EQ(is_blocked(g, {x, y}), x == 1 && y == 1);
}

TEST(Grid, OffGridCellsAreBlocked) {
  const grid g = make_grid(3, 3);
  EXPECT_TRUE(is_blocked(g, {-1, 0}));
  EXPECT_TRUE(is_blocked(g, {0, 3}));
  EXPECT_TRUE(is_blocked(g, {3, 3}));
  EXPECT_TRUE(is_blocked(g, {-5, 100}));
}

TEST(Grid, OutOfRangeBlockedCellIsRejected) {
  EXPECT_THROW(make_grid(3, 3, {{3, 0}}), grid_error);
  EXPECT_THROW(make_grid(0, 3), grid_error);
}

TEST(Grid, CostsBelowOneAreRejected) {
  EXPECT_THROW(make_grid(2, 2, std::map<cell, double>{{{0, 0}, 0.5}}), grid_error);
}

TEST(Grid, CostMapDefaultsToOne) {
  const grid g = make_grid(3, 2, std::map<cell, double>{{{1, 0}, 5.0}, {{2, 1}, infinity}});
  EXPECT_EQ(g.cost(0, 0), 1.0);
  EXPECT_EQ(g.cost(1, 0), 5.0);
  EXPECT_TRUE(g.is_blocked(2, 1));
  EXPECT_FALSE(g.uniform());
}

TEST(Grid, Fig8BlockedCell) {
  const auto F = fixtures::fig8();
  // the only blocked cell lies between B3 and the line from A4 to B2
  EXPECT_EQ(F.f.c("A2-A3-B3-B2"), (cell{1, 1}));
  EXPECT_TRUE(is_blocked(F.map, F.f.c("A2-A3-B3-B2")));
  EXPECT_FALSE(is_blocked(F.map, F.f.c("A3-A4-B4-B3")));
  EXPECT_EQ(F.map.blocked_count(), 1u);
}

TEST(Grid, CornersOrder) {
  const auto a = corners({0, 0});
  EXPECT_EQ(a[0], (vertex{0, 0}));
  EXPECT_EQ(a[1], (vertex{1, 0}));
  EXPECT_EQ(a[2], (vertex{0, 1}));
  EXPECT_EQ(a[3], (vertex{1, 1}));
  const auto b = corners({2, 3});
  EXPECT_EQ(b[0], (vertex{2, 3}));
  EXPECT_EQ(b[1], (vertex{3, 3}));
  EXPECT_EQ(b[2], (vertex{2, 4}));
  EXPECT_EQ(b[3], (vertex{3, 4}));
  for (int x = -2; x < 3; ++x)
    for (int y = -2; y < 3; ++y) {
      const auto c = corners({x, y});
      EXPECT_EQ(std::set<vertex>(c.begin(), c.end()).size(), 4u);
    }
}

TEST(Grid, AdjacentBlockedCells) {
  EXPECT_TRUE(adjacent_blocked_cells(make_grid(4, 4), {0, 0}).empty());
  EXPECT_TRUE(adjacent_blocked_cells(make_grid(4, 4), {2, 2}).empty());
  const grid g = make_grid(4, 4, {{1, 1}});
  EXPECT_EQ(adjacent_blocked_cells(g, {1, 1}), (std::vector<cell>{{1, 1}}));
  EXPECT_EQ(adjacent_blocked_cells(g, {2, 2}), (std::vector<cell>{{1, 1}}));
  EXPECT_EQ(adjacent_blocked_cells(g, {2, 1}), (std::vector<cell>{{1, 1}}));
  EXPECT_TRUE(adjacent_blocked_cells(g, {3, 3}).empty());
  const grid full = make_grid(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(adjacent_blocked_cells(full, {1, 1}).size(), 4u);
}

TEST(Neighbors, Fig1VisibleNeighbours) {
  const auto F = fixtures::fig1();
  const auto n = F.f.names(neighbors_vis(F.map, F.f.v("B4"), branching_factor::eight));
  const std::set<std::string> got(n.begin(), n.end());
  EXPECT_EQ(got, (std::set<std::string>{"A3", "A4", "A5", "B3", "B5", "C3", "C4"}));
}

TEST(Neighbors, EmptyGridCounts) {
  const grid g = make_grid(10, 10);
  EXPECT_EQ(neighbors_vis(g, {5, 5}, branching_factor::four).size(), 4u);
  EXPECT_EQ(neighbors_vis(g, {5, 5}, branching_factor::eight).size(), 8u);
  const auto n16 = neighbors_vis(g, {5, 5}, branching_factor::sixteen);
  EXPECT_EQ(n16.size(), 16u);
  EXPECT_EQ(std::set<vertex>(n16.begin(), n16.end()).size(), 16u);
  // the corner vertex keeps only the moves that stay on the grid
  EXPECT_EQ(neighbors_vis(g, {0, 0}, branching_factor::eight).size(), 3u);
  EXPECT_EQ(neighbors_vis(g, {0, 0}, branching_factor::sixteen).size(), 5u);
}

TEST(Neighbors, SixteenAddsKnightMoves) {
  const grid g = make_grid(10, 10);
  const auto n16 = neighbors_vis(g, {5, 5}, branching_factor::sixteen);
  for (vertex d : {vertex{1, 2}, vertex{2, 1}, vertex{-1, 2}, vertex{-2, 1}, vertex{-1, -2}, vertex{-2, -1},
                   vertex{1, -2}, vertex{2, -1}})
    EXPECT_NE(std::find(n16.begin(), n16.end(), vertex{5 + d.x, 5 + d.y}), n16.end());
}

class NeighborProperties : public ::testing::TestWithParam<int> {};

TEST_P(NeighborProperties, SymmetricSubsetAndVisible) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = [&] {
      std::bernoulli_distribution coin(0.3);
      std::vector<cell> b;
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
          if (coin(rng)) b.push_back({x, y});
      return make_grid(8, 8, b);
    }();
    for (int y = 0; y <= 8; ++y)
      for (int x = 0; x <= 8; ++x) {
        const vertex s{x, y};
        const auto n4 = neighbors_vis(g, s, branching_factor::four);
        const auto n8 = neighbors_vis(g, s, branching_factor::eight);
        for (const vertex t : n4) EXPECT_NE(std::find(n8.begin(), n8.end(), t), n8.end());
        std::size_t diag = 0;
        for (const vertex t : n8) {
          if (t.x != s.x && t.y != s.y) ++diag;
          EXPECT_TRUE(line_of_sight(g, s, t));
        }
        EXPECT_EQ(n8.size(), n4.size() + diag);
        for (auto bf : {branching_factor::four, branching_factor::eight})
          for (const vertex t : neighbors_vis(g, s, bf)) {
            const auto back = neighbors_vis(g, t, bf);
            EXPECT_NE(std::find(back.begin(), back.end(), s), back.end());
          }
      }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NeighborProperties, ::testing::Values(1, 2, 3));

TEST(RandomGrid, ZeroPercentHasNoBlockedCells) {
  const auto inst = generate_random_grid(50, 40, 0.0, 9);
  EXPECT_EQ(inst.map.blocked_count(), 0u);
  EXPECT_EQ(inst.start, (vertex{0, 0}));
  EXPECT_EQ(inst.goal.x, 49);
  EXPECT_EQ(inst.goal, (vertex{inst.goal_cell.cx, inst.goal_cell.cy}));
}

TEST(RandomGrid, BlockedCountWithinFourSigma) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const auto inst = generate_random_grid(100, 100, 20.0, seed);
    const double n = 98.0 * 98.0, p = 0.2;
    const double mean = n * p, sigma = std::sqrt(n * p * (1 - p));
    EXPECT_LE(std::abs(static_cast<double>(inst.map.blocked_count()) - mean), 4 * sigma);
  }
}

TEST(RandomGrid, BorderIsFree) {
  const auto inst = generate_random_grid(30, 20, 60.0, 5);
  for (int x = 0; x < 30; ++x) {
    EXPECT_FALSE(inst.map.is_blocked(x, 0));
    EXPECT_FALSE(inst.map.is_blocked(x, 19));
  }
  for (int y = 0; y < 20; ++y) {
    EXPECT_FALSE(inst.map.is_blocked(0, y));
    EXPECT_FALSE(inst.map.is_blocked(29, y));
  }
}

TEST(RandomGrid, SameSeedSameGrid) {
  const auto a = generate_random_grid(64, 48, 25.0, 77);
  const auto b = generate_random_grid(64, 48, 25.0, 77);
  const auto c = generate_random_grid(64, 48, 25.0, 78);
  EXPECT_EQ(a.map.costs(), b.map.costs());
  EXPECT_EQ(a.goal, b.goal);
  EXPECT_NE(a.map.costs(), c.map.costs());
}

TEST(RandomGrid, PinnedStream) {
  // mt19937_64 output is fixed by the standard; so is everything derived here.
  std::mt19937_64 ref(5489u);
  for (int i = 1; i < 10000; ++i) ref();
  EXPECT_EQ(ref(), 9981545732273789042ULL);
  replay_rng r(1);
  std::mt19937_64 e(1);
  EXPECT_EQ(r.next(), e());
}

TEST(RandomGrid, RejectsBadPercent) {
  EXPECT_THROW(generate_random_grid(10, 10, 100.0, 1), std::invalid_argument);
  EXPECT_THROW(generate_random_grid(10, 10, -1.0, 1), std::invalid_argument);
}

TEST(RandomGrid, CostModels) {
  const auto u = generate_cost_grid(60, 60, cost_model::uniform_1_15, 3);
  std::set<double> seen;
  for (double c : u.map.costs()) {
    EXPECT_GE(c, 1.0);
    EXPECT_LE(c, 15.0);
    EXPECT_EQ(c, std::floor(c));
    seen.insert(c);
  }
  EXPECT_EQ(seen.size(), 15u);
  const auto h = generate_cost_grid(100, 100, cost_model::half_ones_1_15, 3);
  const auto ones = std::count(h.map.costs().begin(), h.map.costs().end(), 1.0);
  EXPECT_NEAR(static_cast<double>(ones) / 10000.0, 0.5, 0.03);
}

TEST(MapIo, AsciiRowsAreNorthFirst) {
  const grid g = load_map("type octile\nheight 2\nwidth 2\nmap\n..\n.@\n");
  EXPECT_EQ(g.blocked_count(), 1u);
  EXPECT_TRUE(g.is_blocked(1, 0));
}

TEST(MapIo, AsciiGlyphs) {
  const grid g = load_map("type octile\nheight 1\nwidth 5\nmap\n.G@OT\n");
  EXPECT_FALSE(g.is_blocked(0, 0));
  EXPECT_FALSE(g.is_blocked(1, 0));
  EXPECT_TRUE(g.is_blocked(2, 0));
  EXPECT_TRUE(g.is_blocked(3, 0));
  EXPECT_TRUE(g.is_blocked(4, 0));
}

TEST(MapIo, HeightMismatch) {
  EXPECT_THROW(load_map("type octile\nheight 3\nwidth 2\nmap\n..\n..\n"), map_parse_error);
}

TEST(MapIo, WidthMismatchNamesPosition) {
  try {
    load_map("type octile\nheight 2\nwidth 3\nmap\n...\n..\n");
    FAIL();
  } catch (const map_parse_error& e) {
    EXPECT_EQ(e.line(), 6);
  }
}

TEST(MapIo, UnknownGlyphNamesLineAndColumn) {
  try {
    load_map("type octile\nheight 2\nwidth 3\nmap\n...\n.S.\n");
    FAIL();
  } catch (const map_parse_error& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_EQ(e.column(), 2);
  }
}

TEST(MapIo, MalformedHeader) {
  EXPECT_THROW(load_map("type octile\nwidth 2\nheight 2\nmap\n..\n..\n"), map_parse_error);
  EXPECT_THROW(load_map("height 2\n"), map_parse_error);
  EXPECT_THROW(load_map(""), map_parse_error);
}

TEST(MapIo, JsonCosts) {
  const grid g = load_map(R"({"width":2,"height":2,"costs":[[1,5],[15,"inf"]]})");
  EXPECT_FALSE(g.uniform());
  EXPECT_EQ(g.cost(0, 1), 1.0);
  EXPECT_EQ(g.cost(1, 1), 5.0);
  EXPECT_EQ(g.cost(0, 0), 15.0);
  EXPECT_TRUE(g.is_blocked(1, 0));
}

TEST(MapIo, JsonErrors) {
  EXPECT_THROW(load_map(R"({"width":2,"height":2,"costs":[[1,5]]})"), map_parse_error);
  EXPECT_THROW(load_map(R"({"width":2,"height":1,"costs":[[1,"x"]]})"), map_parse_error);
  EXPECT_THROW(load_map(R"({"width":2,"height":1,"costs":[[1,0]]})"), map_parse_error);
  try {
    load_map("{\"width\":2,\n\"height\" 1}");
    FAIL();
  } catch (const map_parse_error& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(MapIo, RoundTrip) {
  const auto a = generate_random_grid(12, 7, 30.0, 4);
  EXPECT_EQ(load_map(to_ascii_map(a.map)).costs(), a.map.costs());
  const auto b = generate_cost_grid(9, 5, cost_model::uniform_1_15, 4, 10.0);
  EXPECT_EQ(load_map(to_json_map(b.map)).costs(), b.map.costs());
}
