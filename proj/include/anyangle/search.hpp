#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"
#include "line_of_sight.hpp"
#include "open_list.hpp"

namespace anyangle {

enum class node_status : std::uint8_t { unseen, open, closed };

inline constexpr vertex no_vertex{-1, -1};

struct search_node {
  double g = infinity;
  vertex parent = no_vertex;
  node_status status = node_status::unseen;
  double lb = -infinity;  // angle range, AP Theta* only
  double ub = infinity;
};

// Per-vertex search state, dense over all vertices of a grid.
class node_table {
 public:
  node_table() = default;
  explicit node_table(const grid& g) : row_(static_cast<std::size_t>(g.width()) + 1), nodes_(g.vertex_count()) {}

  std::size_t index(vertex v) const { return static_cast<std::size_t>(v.x) + static_cast<std::size_t>(v.y) * row_; }
  vertex at(std::size_t i) const { return {static_cast<int>(i % row_), static_cast<int>(i / row_)}; }

  search_node& operator[](vertex v) { return nodes_[index(v)]; }
  const search_node& operator[](vertex v) const { return nodes_[index(v)]; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(vertex v) const {
    return v.x >= 0 && v.y >= 0 && static_cast<std::size_t>(v.x) < row_ && index(v) < nodes_.size();
  }

 private:
  std::size_t row_ = 0;
  std::vector<search_node> nodes_;
};

struct expansion_record {
  vertex v;
  double f;
  double g;
  vertex parent;
};

struct search_options {
  tie_policy tie = tie_policy::smaller_g;
  bool reexpand = false;
  bool record_trace = false;
  std::size_t max_expansions = 0;  // 0: no limit
};

struct search_outcome {
  bool found = false;
  bool budget_exhausted = false;
  std::size_t expansions = 0;
  std::vector<expansion_record> trace;
};

// Visible grid neighbours under a branching factor.
struct grid_graph {
  const grid* map;
  branching_factor bf = branching_factor::eight;

  template <class F>
  void for_each_neighbor(vertex s, F&& f) const {
    for_each_visible_neighbor(*map, s, bf, f);
  }
};

// The best-first loop shared by every planner. Rule supplies
//   on_expand(engine&, s)          -- called after s is closed
//   update_vertex(engine&, s, t)   -- for each neighbour t not filtered out
// and calls back into relax() to lower g-values.
template <class Graph, class Heuristic, class Rule>
class search_engine {
 public:
  search_engine(const grid& g, Graph graph, vertex start, std::optional<vertex> goal, Heuristic h, Rule rule,
                search_options opt)
      : map_(g),
        graph_(std::move(graph)),
        start_(start),
        goal_(goal),
        h_(std::move(h)),
        rule_(std::move(rule)),
        opt_(opt),
        nodes_(g),
        open_(opt.tie, g.vertex_count()) {
    if (!g.in_range(start)) throw std::invalid_argument("start vertex out of range");
    if (goal && !g.in_range(*goal)) throw std::invalid_argument("goal vertex out of range");
  }

  search_outcome run() {
    search_outcome out;
    auto& sn = nodes_[start_];
    sn.g = 0.0;
    sn.parent = start_;
    sn.status = node_status::open;
    open_.insert(nodes_.index(start_), h_(start_), 0.0);

    while (!open_.empty()) {
      const auto e = open_.pop();
      const vertex s = nodes_.at(e.id);
      auto& n = nodes_[s];
      n.status = node_status::closed;
      ++out.expansions;
      if (opt_.record_trace) out.trace.push_back({s, e.f, e.g, n.parent});
      if (goal_ && s == *goal_) {
        out.found = true;
        return out;
      }
      rule_.on_expand(*this, s);
      graph_.for_each_neighbor(s, [&](vertex t) {
        if (!opt_.reexpand && nodes_[t].status == node_status::closed) return;
        rule_.update_vertex(*this, s, t);
      });
      if (opt_.max_expansions && out.expansions >= opt_.max_expansions) {
        out.budget_exhausted = true;
        return out;
      }
    }
    return out;
  }

  // Lowers g(t) on strict improvement and (re)queues t. With re-expansion a
  // closed vertex goes back on the open list.
  bool relax(vertex t, double g, vertex parent) {
    auto& n = nodes_[t];
    if (!(g < n.g)) return false;
    n.g = g;
    n.parent = parent;
    n.status = node_status::open;
    open_.insert_or_update(nodes_.index(t), g + h_(t), g);
    return true;
  }

  const grid& map() const { return map_; }
  const Graph& graph() const { return graph_; }
  vertex start() const { return start_; }
  search_node& node(vertex v) { return nodes_[v]; }
  const node_table& nodes() const { return nodes_; }
  node_table& nodes() { return nodes_; }
  Rule& rule() { return rule_; }

 private:
  const grid& map_;
  Graph graph_;
  vertex start_;
  std::optional<vertex> goal_;
  Heuristic h_;
  Rule rule_;
  search_options opt_;
  node_table nodes_;
  open_list open_;
};

// Follows parents back to the start. Consecutive repeats are collapsed.
inline std::vector<vertex> extract_path(const node_table& nodes, vertex goal) {
  if (!nodes.contains(goal) || nodes[goal].parent == no_vertex)
    throw std::invalid_argument("extract_path: vertex was never reached");
  std::vector<vertex> rev{goal};
  vertex v = goal;
  for (std::size_t steps = 0;; ++steps) {
    const vertex p = nodes[v].parent;
    if (p == v) break;
    if (p == no_vertex) throw std::logic_error("extract_path: broken parent chain");
    if (steps > nodes.size()) throw std::logic_error("extract_path: parent cycle");
    if (rev.back() != p) rev.push_back(p);
    v = p;
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace anyangle
