#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"
#include "heuristics.hpp"
#include "line_of_sight.hpp"
#include "path_metrics.hpp"
#include "search.hpp"
#include "visibility_graph.hpp"

namespace anyangle {

enum class algorithm { astar_grid, astar_ps, basic_theta, ap_theta, astar_visgraph };
enum class heuristic_kind { octile, straight_line };

inline const char* to_string(algorithm a) {
  switch (a) {
    case algorithm::astar_grid: return "astar_grid";
    case algorithm::astar_ps: return "astar_ps";
    case algorithm::basic_theta: return "basic_theta";
    case algorithm::ap_theta: return "ap_theta";
    case algorithm::astar_visgraph: return "astar_visgraph";
  }
  return "?";
}

inline algorithm parse_algorithm(const std::string& s) {
  for (auto a : {algorithm::astar_grid, algorithm::astar_ps, algorithm::basic_theta, algorithm::ap_theta,
                 algorithm::astar_visgraph})
    if (s == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

inline const char* to_string(heuristic_kind h) { return h == heuristic_kind::octile ? "octile" : "straight_line"; }

inline heuristic_kind parse_heuristic(const std::string& s) {
  if (s == "octile") return heuristic_kind::octile;
  if (s == "straight_line") return heuristic_kind::straight_line;
  throw std::invalid_argument("unknown heuristic '" + s + "'");
}

class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unset optionals take the per-algorithm defaults: octile h for astar_grid,
// straight-line h elsewhere; larger-g ties for the A* family, smaller-g for
// the Theta* family.
struct planner_config {
  algorithm algo = algorithm::basic_theta;
  std::optional<heuristic_kind> heuristic;
  double weight = 1.0;
  std::optional<tie_policy> tie;
  bool reexpand = false;
  branching_factor branching = branching_factor::eight;
  bool three_path = false;
  bool nonuniform = false;
  std::string name;  // label for reports; derived when empty

  heuristic_kind heuristic_or_default() const {
    if (heuristic) return *heuristic;
    return algo == algorithm::astar_grid ? heuristic_kind::octile : heuristic_kind::straight_line;
  }
  tie_policy tie_or_default() const {
    if (tie) return *tie;
    return (algo == algorithm::basic_theta || algo == algorithm::ap_theta) ? tie_policy::smaller_g
                                                                           : tie_policy::larger_g;
  }
  std::string label() const { return name.empty() ? to_string(algo) : name; }
};

inline void validate(const planner_config& c) {
  if (!(c.weight >= 0.0 && c.weight <= 1.0)) throw config_error("weight must lie in [0, 1]");
  const bool grid_astar = c.algo == algorithm::astar_grid || c.algo == algorithm::astar_ps;
  if (c.heuristic_or_default() == heuristic_kind::octile) {
    if (!grid_astar) throw config_error("octile heuristic is only valid for astar_grid and astar_ps");
    if (c.branching != branching_factor::eight) throw config_error("octile heuristic requires branching factor 8");
  }
  if (c.algo == algorithm::ap_theta) {
    if (c.branching != branching_factor::eight) throw config_error("ap_theta requires branching factor 8");
    if (c.reexpand) throw config_error("ap_theta does not support re-expansion");
  }
  if (c.three_path && c.algo != algorithm::basic_theta) throw config_error("three_path applies to basic_theta only");
  if (c.three_path && c.nonuniform) throw config_error("three_path is not defined for non-uniform costs");
  if (c.nonuniform && c.algo != algorithm::basic_theta && c.algo != algorithm::astar_grid)
    throw config_error("non-uniform costs are supported by astar_grid and basic_theta only");
}

// Signed angle at p from ray p->s to ray p->t, degrees in (-180, 180].
// Positive when p->s is clockwise of p->t.
inline double theta_angle(vertex s, vertex p, vertex t) {
  if (p == s || p == t) throw std::invalid_argument("theta_angle: coincident points");
  constexpr double deg = 180.0 / 3.14159265358979323846;
  double a = (std::atan2(t.y - p.y, t.x - p.x) - std::atan2(s.y - p.y, s.x - p.x)) * deg;
  while (a <= -180.0) a += 360.0;
  while (a > 180.0) a -= 360.0;
  return a;
}

namespace detail {

// Sign of the angle above, exactly: -1, 0 or +1. Opposite rays give +1 (180).
inline int theta_sign(vertex s, vertex p, vertex t) {
  const std::int64_t ax = s.x - p.x, ay = s.y - p.y, bx = t.x - p.x, by = t.y - p.y;
  const std::int64_t cr = ax * by - ay * bx;
  if (cr > 0) return 1;
  if (cr < 0) return -1;
  return (ax * bx + ay * by) > 0 ? 0 : 1;
}

inline double step_cost(const grid& g, vertex a, vertex b, bool nonuniform) {
  if (!nonuniform) return distance(a, b);
  const auto sc = segment_cost(g, a, b);
  return sc ? sc->total : infinity;
}

}  // namespace detail

// Angle tolerance for the range test.
inline constexpr double angle_tolerance = 1e-9;

struct astar_rule {
  bool nonuniform = false;

  template <class E>
  void on_expand(E&, vertex) {}

  template <class E>
  void update_vertex(E& e, vertex s, vertex t) {
    const double c = detail::step_cost(e.map(), s, t, nonuniform);
    if (c == infinity) return;
    e.relax(t, e.node(s).g + c, s);
  }
};

struct basic_theta_rule {
  bool three_path = false;

  template <class E>
  void on_expand(E&, vertex) {}

  template <class E>
  void update_vertex(E& e, vertex s, vertex t) {
    const grid& g = e.map();
    const vertex p = e.node(s).parent;
    if (three_path) {
      const vertex pp = e.node(p).parent;
      if (pp != p && line_of_sight(g, pp, t)) {
        e.relax(t, e.node(pp).g + distance(pp, t), pp);
        return;
      }
    }
    if (line_of_sight(g, p, t))
      e.relax(t, e.node(p).g + distance(p, t), p);
    else
      e.relax(t, e.node(s).g + distance(s, t), s);
  }
};

// Picks the cheaper of the two candidate paths under clipped segment costs;
// equal costs keep Path 1.
struct nonuniform_theta_rule {
  template <class E>
  void on_expand(E&, vertex) {}

  template <class E>
  void update_vertex(E& e, vertex s, vertex t) {
    const grid& g = e.map();
    const vertex p = e.node(s).parent;
    const auto c1 = segment_cost(g, s, t);
    const double path1 = c1 ? e.node(s).g + c1->total : infinity;
    double path2 = infinity;
    if (p != s)
      if (const auto c2 = segment_cost(g, p, t)) path2 = e.node(p).g + c2->total;
    if (path2 < path1)
      e.relax(t, path2, p);
    else if (path1 < infinity)
      e.relax(t, path1, s);
  }
};

// Recomputes [lb(s), ub(s)] right after s is expanded.
template <class E>
void update_bounds(E& e, vertex s) {
  auto& n = e.node(s);
  n.lb = -infinity;
  n.ub = infinity;
  if (s == e.start()) return;
  const grid& g = e.map();
  const vertex p = n.parent;
  const std::int64_t cps = squared_distance(p, s);

  // Blocked cells touching s, including the off-grid frame.
  for (const cell b : incident_cells(s)) {
    if (!g.is_blocked(b)) continue;
    bool all_neg = true, all_pos = true;
    for (const vertex sp : corners(b)) {
      if (sp == p) continue;
      const int sg = detail::theta_sign(s, p, sp);
      if (sg == 0 && squared_distance(p, sp) <= cps) continue;
      if (sg >= 0) all_neg = false;
      if (sg <= 0) all_pos = false;
    }
    if (all_neg) n.lb = 0.0;
    if (all_pos) n.ub = 0.0;
  }

  e.graph().for_each_neighbor(s, [&](vertex t) {
    if (t == p) return;
    const auto& nt = e.node(t);
    const double th = theta_angle(s, p, t);
    const bool closed = nt.status == node_status::closed;
    if (closed && nt.parent == p && t != e.start()) {
      // lb(t) + th telescopes to an angle between two lattice directions seen
      // from p: exactly 0 or far above the tolerance. Float noise around 0
      // must not drop the constraint.
      const double lo = nt.lb + th, hi = nt.ub + th;
      if (lo <= angle_tolerance) n.lb = std::max(n.lb, std::min(lo, 0.0));
      if (hi >= -angle_tolerance) n.ub = std::min(n.ub, std::max(hi, 0.0));
    }
    if (squared_distance(p, t) < cps && (!closed || nt.parent != p)) {
      const int sg = detail::theta_sign(s, p, t);
      if (sg < 0) n.lb = std::max(n.lb, th);
      if (sg > 0) n.ub = std::min(n.ub, th);
    }
  });
}

// Line-of-sight to the parent is inferred from the angle range instead of
// being checked.
struct ap_theta_rule {
  template <class E>
  void on_expand(E& e, vertex s) {
    update_bounds(e, s);
  }

  template <class E>
  void update_vertex(E& e, vertex s, vertex t) {
    const auto& n = e.node(s);
    const vertex p = n.parent;
    if (s != e.start() && t != p) {
      const double th = theta_angle(s, p, t);
      if (n.lb - angle_tolerance <= th && th <= n.ub + angle_tolerance) {
        e.relax(t, e.node(p).g + distance(p, t), p);
        return;
      }
    }
    e.relax(t, e.node(s).g + distance(s, t), s);
  }
};

// Greedy smoothing: drop s_i whenever the current anchor sees s_{i+1}.
inline std::vector<vertex> post_smooth(const grid& g, const std::vector<vertex>& path) {
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!line_of_sight(g, path[i - 1], path[i])) throw std::invalid_argument("post_smooth: input path is blocked");
  if (path.size() <= 2) return path;
  std::vector<vertex> out{path.front()};
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (!line_of_sight(g, out.back(), path[i + 1])) out.push_back(path[i]);
  out.push_back(path.back());
  return out;
}

struct path_result {
  bool found = false;
  std::vector<vertex> path;
  double length = 0.0;  // Euclidean
  double cost = 0.0;    // equals length unless costs are non-uniform
  std::size_t expansions = 0;
  std::size_t heading_changes = 0;
  std::chrono::microseconds elapsed{0};
  std::vector<expansion_record> trace;
};

// Raw search state, for callers that need more than the goal path.
struct search_run {
  search_outcome outcome;
  node_table nodes;
};

namespace detail {

struct heuristic_fn {
  heuristic_kind kind;
  double w;
  std::optional<vertex> goal;
  double operator()(vertex v) const {
    if (!goal) return 0.0;
    return kind == heuristic_kind::octile ? w * octile_h(v, *goal) : straight_line_h(v, *goal, w);
  }
};

template <class Graph, class Rule>
search_run execute(const grid& g, Graph graph, vertex start, std::optional<vertex> goal, const planner_config& cfg,
                   Rule rule, const search_options& opt) {
  search_engine engine(g, std::move(graph), start, goal,
                       heuristic_fn{cfg.heuristic_or_default(), cfg.weight, goal}, std::move(rule), opt);
  search_run r;
  r.outcome = engine.run();
  r.nodes = std::move(engine.nodes());
  return r;
}

}  // namespace detail

// Runs the configured search. Without a goal the search runs until the open
// list is empty (h = 0) and every reached vertex carries its g and parent.
// astar_ps is searched like astar_grid here; smoothing happens in plan().
inline search_run run_search(const grid& g, vertex start, std::optional<vertex> goal, const planner_config& cfg,
                             bool record_trace = false, std::size_t max_expansions = 0) {
  validate(cfg);
  if (!g.in_range(start)) throw std::invalid_argument("start vertex out of range");
  if (goal && !g.in_range(*goal)) throw std::invalid_argument("goal vertex out of range");
  search_options opt;
  opt.tie = cfg.tie_or_default();
  opt.reexpand = cfg.reexpand;
  opt.record_trace = record_trace;
  opt.max_expansions = max_expansions;
  const grid_graph gg{&g, cfg.branching};
  switch (cfg.algo) {
    case algorithm::astar_grid:
    case algorithm::astar_ps:
      return detail::execute(g, gg, start, goal, cfg, astar_rule{cfg.nonuniform}, opt);
    case algorithm::basic_theta:
      if (cfg.nonuniform) return detail::execute(g, gg, start, goal, cfg, nonuniform_theta_rule{}, opt);
      return detail::execute(g, gg, start, goal, cfg, basic_theta_rule{cfg.three_path}, opt);
    case algorithm::ap_theta:
      return detail::execute(g, gg, start, goal, cfg, ap_theta_rule{}, opt);
    case algorithm::astar_visgraph:
      return detail::execute(g, lazy_visibility_graph(g, start, goal.value_or(start)), start, goal, cfg,
                             astar_rule{false}, opt);
  }
  throw config_error("unknown algorithm");
}

inline double path_cost(const grid& g, const std::vector<vertex>& path, bool nonuniform) {
  if (!nonuniform) return path_length(path);
  double c = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) c += detail::step_cost(g, path[i - 1], path[i], true);
  return c;
}

inline path_result plan(const grid& g, vertex start, vertex goal, const planner_config& cfg,
                        bool record_trace = false) {
  const auto t0 = std::chrono::steady_clock::now();
  search_run run = run_search(g, start, goal, cfg, record_trace);
  path_result r;
  r.expansions = run.outcome.expansions;
  r.trace = std::move(run.outcome.trace);
  if (run.outcome.found) {
    r.found = true;
    r.path = extract_path(run.nodes, goal);
    if (cfg.algo == algorithm::astar_ps) r.path = post_smooth(g, r.path);
    r.length = path_length(r.path);
    r.cost = path_cost(g, r.path, cfg.nonuniform);
    r.heading_changes = heading_changes(r.path);
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  return r;
}

struct single_source_result {
  std::vector<double> g;  // by grid vertex index; infinity if unreached
  std::vector<vertex> parent;
  std::size_t expansions = 0;
};

inline single_source_result run_single_source(const grid& g, vertex start, const planner_config& cfg) {
  if (cfg.algo == algorithm::astar_ps || cfg.algo == algorithm::astar_visgraph)
    throw config_error("single-source mode needs a grid planner");
  search_run run = run_search(g, start, std::nullopt, cfg);
  single_source_result r;
  r.expansions = run.outcome.expansions;
  r.g.resize(run.nodes.size());
  r.parent.resize(run.nodes.size());
  for (std::size_t i = 0; i < run.nodes.size(); ++i) {
    const auto& n = run.nodes[run.nodes.at(i)];
    r.g[i] = n.g;
    r.parent[i] = n.parent;
  }
  return r;
}

}  // namespace anyangle
