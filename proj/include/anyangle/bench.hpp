#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

#include "grid.hpp"
#include "line_of_sight.hpp"
#include "map_io.hpp"
#include "planners.hpp"
#include "random_grid.hpp"

namespace anyangle {

// Paths differing by no more than this count as equally long.
inline constexpr double win_tie_threshold = 1e-6;

struct t_test_result {
  double t = 0.0;            // +-infinity when every difference is the same non-zero value
  double p_value = 1.0;      // two-sided
  std::size_t df = 0;
  bool significant = false;  // at alpha = 0.01, two-sided
};

class degenerate_sample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Paired t-test on a_i - b_i.
inline t_test_result paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired_t_test: samples differ in length");
  const std::size_t n = a.size();
  if (n < 2) throw degenerate_sample("paired_t_test: need at least two pairs");
  double mean = 0.0;
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    mean += d;
    if (d != 0.0) all_zero = false;
  }
  if (all_zero) throw degenerate_sample("paired_t_test: all differences are zero");
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  t_test_result r;
  r.df = n - 1;
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    r.t = mean > 0 ? infinity : -infinity;
    r.p_value = 0.0;
    r.significant = true;
    return r;
  }
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  const boost::math::students_t dist(static_cast<double>(r.df));
  const double crit = boost::math::quantile(dist, 1.0 - 0.005);
  r.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t)));
  r.significant = std::abs(r.t) > crit;
  return r;
}

enum class grid_kind { random, map_file };

struct experiment_spec {
  grid_kind kind = grid_kind::random;
  std::string map_file;  // map_file kind
  int width = 100;
  int height = 100;
  double percent_blocked = 20.0;
  std::optional<cost_model> costs;  // set for non-uniform experiments
  int instance_count = 100;
  std::uint64_t seed = 1;
  std::vector<planner_config> planners;
  bool timing = true;     // false writes elapsed_us = 0 so outputs replay byte for byte
  unsigned threads = 1;
};

class spec_error : public std::invalid_argument {
 public:
  spec_error(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class experiment_error : public std::runtime_error {
 public:
  experiment_error(std::size_t instance, std::uint64_t seed, const std::string& what)
      : std::runtime_error("instance " + std::to_string(instance) + " (seed " + std::to_string(seed) + "): " + what),
        instance_(instance),
        seed_(seed) {}
  std::size_t instance() const { return instance_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::size_t instance_;
  std::uint64_t seed_;
};

struct instance_record {
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::size_t planner = 0;
  double length = 0.0;
  double cost = 0.0;
  std::size_t expansions = 0;
  std::size_t heading_changes = 0;
  std::int64_t elapsed_us = 0;
};

struct planner_summary {
  std::string label;
  double mean_length = 0.0;
  double mean_cost = 0.0;
  double mean_expansions = 0.0;
  double mean_heading_changes = 0.0;
  double mean_runtime_us = 0.0;
};

struct pairwise_comparison {
  std::size_t a = 0, b = 0;
  double win_rate = 0.0;   // a strictly cheaper than b
  double loss_rate = 0.0;
  double tie_rate = 0.0;
  std::optional<t_test_result> t_test;  // empty when degenerate
  std::string t_test_note;
};

struct experiment_report {
  experiment_spec spec;
  std::vector<planner_summary> planners;
  std::vector<instance_record> records;  // instance-major, planner-minor
  std::vector<pairwise_comparison> pairs;

  const instance_record& at(std::size_t instance, std::size_t planner) const {
    return records[instance * planners.size() + planner];
  }
  // Per-instance cost column of one planner.
  std::vector<double> costs_of(std::size_t planner) const {
    std::vector<double> out;
    for (std::size_t i = 0; i * planners.size() < records.size(); ++i) out.push_back(at(i, planner).cost);
    return out;
  }
};

inline void validate(const experiment_spec& s) {
  if (s.instance_count < 1) throw spec_error("instance_count", "must be at least 1");
  if (s.planners.empty()) throw spec_error("planners", "must list at least one planner");
  if (s.kind == grid_kind::random) {
    if (s.width < 1) throw spec_error("width", "must be positive");
    if (s.height < 1) throw spec_error("height", "must be positive");
    if (!(s.percent_blocked >= 0.0 && s.percent_blocked < 100.0))
      throw spec_error("percent_blocked", "must lie in [0, 100)");
  } else if (s.map_file.empty()) {
    throw spec_error("map_file", "required for grid_kind map_file");
  }
  if (s.kind == grid_kind::map_file && s.costs) throw spec_error("cost_model", "only applies to random grids");
  for (std::size_t i = 0; i < s.planners.size(); ++i) {
    const std::string field = "planners[" + std::to_string(i) + "]";
    try {
      validate(s.planners[i]);
    } catch (const config_error& e) {
      throw spec_error(field, e.what());
    }
    if (s.costs && !s.planners[i].nonuniform)
      throw spec_error(field + ".nonuniform", "cost_model experiments need non-uniform planners");
  }
}

namespace detail {

// Start and goal for map-file instances: random corners of unblocked cells,
// redrawn until the goal is reachable.
inline std::pair<vertex, vertex> draw_map_query(const grid& g, std::uint64_t seed) {
  std::vector<vertex> candidates;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const vertex v = g.vertex_at(i);
    for (const cell c : incident_cells(v))
      if (g.in_range(c) && !g.is_blocked(c)) {
        candidates.push_back(v);
        break;
      }
  }
  if (candidates.size() < 1) throw std::runtime_error("map has no unblocked cell");
  replay_rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const vertex s = candidates[rng.below(candidates.size())];
    const vertex t = candidates[rng.below(candidates.size())];
    // reachability over the 8-connected visible-neighbour graph
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<vertex> stack{s};
    seen[g.index(s)] = 1;
    while (!stack.empty()) {
      const vertex v = stack.back();
      stack.pop_back();
      for_each_visible_neighbor(g, v, branching_factor::eight, [&](vertex n) {
        if (!seen[g.index(n)]) {
          seen[g.index(n)] = 1;
          stack.push_back(n);
        }
      });
    }
    if (seen[g.index(t)]) return {s, t};
  }
  throw std::runtime_error("no connected start/goal pair found in 1000 draws");
}

struct problem {
  grid map;
  vertex start, goal;
};

}  // namespace detail

inline std::uint64_t instance_seed(const experiment_spec& s, std::size_t instance) { return mix_seed(s.seed, instance); }

inline std::vector<planner_summary> summarize(const experiment_spec& spec, const std::vector<instance_record>& recs) {
  const std::size_t np = spec.planners.size();
  std::vector<planner_summary> out(np);
  for (std::size_t p = 0; p < np; ++p) out[p].label = spec.planners[p].label();
  std::vector<std::size_t> count(np, 0);
  for (const auto& r : recs) {
    auto& s = out[r.planner];
    s.mean_length += r.length;
    s.mean_cost += r.cost;
    s.mean_expansions += static_cast<double>(r.expansions);
    s.mean_heading_changes += static_cast<double>(r.heading_changes);
    s.mean_runtime_us += static_cast<double>(r.elapsed_us);
    ++count[r.planner];
  }
  for (std::size_t p = 0; p < np; ++p) {
    const double n = static_cast<double>(std::max<std::size_t>(count[p], 1));
    out[p].mean_length /= n;
    out[p].mean_cost /= n;
    out[p].mean_expansions /= n;
    out[p].mean_heading_changes /= n;
    out[p].mean_runtime_us /= n;
  }
  return out;
}

inline pairwise_comparison compare(const experiment_report& rep, std::size_t a, std::size_t b) {
  pairwise_comparison pc;
  pc.a = a;
  pc.b = b;
  const auto ca = rep.costs_of(a), cb = rep.costs_of(b);
  std::size_t win = 0, loss = 0, tie = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] < cb[i] - win_tie_threshold)
      ++win;
    else if (ca[i] > cb[i] + win_tie_threshold)
      ++loss;
    else
      ++tie;
  }
  const double n = static_cast<double>(ca.size());
  pc.win_rate = win / n;
  pc.loss_rate = loss / n;
  pc.tie_rate = tie / n;
  try {
    pc.t_test = paired_t_test(ca, cb);
  } catch (const degenerate_sample& e) {
    pc.t_test_note = e.what();
  }
  return pc;
}

// Runs every planner on every instance. Instances may run on several threads;
// results land in fixed slots, so the report does not depend on scheduling.
inline experiment_report run_experiment(const experiment_spec& spec) {
  validate(spec);
  experiment_report rep;
  rep.spec = spec;
  const std::size_t np = spec.planners.size();
  const std::size_t ni = static_cast<std::size_t>(spec.instance_count);
  rep.records.resize(ni * np);

  std::optional<grid> shared_map;
  if (spec.kind == grid_kind::map_file) {
    std::ifstream in(spec.map_file, std::ios::binary);
    if (!in) throw spec_error("map_file", "cannot open '" + spec.map_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    shared_map = load_map(buf.str());
  }

  auto make_problem = [&](std::uint64_t seed) -> detail::problem {
    if (shared_map) {
      const auto [s, t] = detail::draw_map_query(*shared_map, seed);
      return {*shared_map, s, t};
    }
    auto inst = spec.costs ? generate_cost_grid(spec.width, spec.height, *spec.costs, seed, spec.percent_blocked)
                           : generate_random_grid(spec.width, spec.height, spec.percent_blocked, seed);
    return {std::move(inst.map), inst.start, inst.goal};
  };

  auto run_instance = [&](std::size_t i) {
    const std::uint64_t seed = instance_seed(spec, i);
    const detail::problem pb = make_problem(seed);
    for (std::size_t p = 0; p < np; ++p) {
      const auto& cfg = spec.planners[p];
      path_result r;
      try {
        r = plan(pb.map, pb.start, pb.goal, cfg);
      } catch (const std::exception& e) {
        throw experiment_error(i, seed, cfg.label() + " failed: " + e.what());
      }
      if (!r.found) throw experiment_error(i, seed, cfg.label() + " found no path");
      for (std::size_t k = 1; k < r.path.size(); ++k)
        if (!line_of_sight_exact(pb.map, r.path[k - 1], r.path[k]))
          throw experiment_error(i, seed, cfg.label() + " returned a blocked path");
      auto& rec = rep.records[i * np + p];
      rec.instance = i;
      rec.seed = seed;
      rec.planner = p;
      rec.length = r.length;
      rec.cost = r.cost;
      rec.expansions = r.expansions;
      rec.heading_changes = r.heading_changes;
      rec.elapsed_us = spec.timing ? r.elapsed.count() : 0;
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(ni)));
  if (threads == 1) {
    for (std::size_t i = 0; i < ni; ++i) run_instance(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    std::size_t first_error_instance = ni;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= ni) return;
          try {
            run_instance(i);
          } catch (...) {
            std::lock_guard lock(err_mu);
            if (i < first_error_instance) {
              first_error_instance = i;
              first_error = std::current_exception();
            }
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  rep.planners = summarize(spec, rep.records);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      if (a != b) rep.pairs.push_back(compare(rep, a, b));
  return rep;
}

// Same harness; the experiment must name a cost model and non-uniform planners.
inline experiment_report nonuniform_experiment(const experiment_spec& spec) {
  if (!spec.costs) throw spec_error("cost_model", "required for a non-uniform experiment");
  return run_experiment(spec);
}

// ---- serialization ------------------------------------------------------

inline std::string to_csv(const experiment_report& rep) {
  std::string out = "instance,seed,planner,length,cost,expansions,heading_changes,elapsed_us\n";
  char buf[256];
  for (const auto& r : rep.records) {
    std::snprintf(buf, sizeof buf, "%zu,%llu,%s,%.9f,%.9f,%zu,%zu,%lld\n", r.instance,
                  static_cast<unsigned long long>(r.seed), rep.planners[r.planner].label.c_str(), r.length, r.cost,
                  r.expansions, r.heading_changes, static_cast<long long>(r.elapsed_us));
    out += buf;
  }
  return out;
}

namespace detail {

inline nlohmann::ordered_json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

}  // namespace detail

inline nlohmann::ordered_json summary_json(const experiment_report& rep) {
  using oj = nlohmann::ordered_json;
  const auto& s = rep.spec;
  oj j;
  oj e;
  e["grid_kind"] = s.kind == grid_kind::random ? "random" : "map_file";
  if (s.kind == grid_kind::map_file)
    e["map_file"] = s.map_file;
  else {
    e["width"] = s.width;
    e["height"] = s.height;
    e["percent_blocked"] = s.percent_blocked;
  }
  if (s.costs) e["cost_model"] = to_string(*s.costs);
  e["instance_count"] = s.instance_count;
  e["seed"] = s.seed;
  j["experiment"] = e;

  oj names = oj::array();
  for (const auto& p : rep.planners) names.push_back(p.label);
  j["planners"] = names;

  auto column = [&](auto member) {
    oj col;
    for (const auto& p : rep.planners) col[p.label] = p.*member;
    return col;
  };
  oj tables;
  tables["path_length"] = column(&planner_summary::mean_length);
  tables["path_cost"] = column(&planner_summary::mean_cost);
  tables["runtime_us"] = column(&planner_summary::mean_runtime_us);
  tables["vertex_expansions"] = column(&planner_summary::mean_expansions);
  tables["heading_changes"] = column(&planner_summary::mean_heading_changes);
  j["tables"] = tables;

  oj pairs = oj::array();
  for (const auto& pc : rep.pairs) {
    oj p;
    p["planner"] = rep.planners[pc.a].label;
    p["versus"] = rep.planners[pc.b].label;
    p["win_rate"] = pc.win_rate;
    p["loss_rate"] = pc.loss_rate;
    p["tie_rate"] = pc.tie_rate;
    if (pc.t_test) {
      p["t"] = detail::finite_or_string(pc.t_test->t);
      p["p_value"] = pc.t_test->p_value;
      p["significant_at_0.01"] = pc.t_test->significant;
    } else {
      p["t_test"] = pc.t_test_note;
    }
    pairs.push_back(p);
  }
  j["comparisons"] = pairs;
  return j;
}

// ---- spec parsing -------------------------------------------------------

namespace detail {

template <class T>
T field_as(const nlohmann::json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw spec_error(path, "has the wrong type");
  }
}

inline planner_config parse_planner(const nlohmann::json& j, const std::string& path) {
  if (j.is_string()) {
    planner_config c;
    try {
      c.algo = parse_algorithm(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw spec_error(path, e.what());
    }
    return c;
  }
  if (!j.is_object()) throw spec_error(path, "must be an algorithm name or an object");
  planner_config c;
  for (const auto& [k, v] : j.items()) {
    const std::string fp = path + "." + k;
    try {
      if (k == "algorithm") c.algo = parse_algorithm(field_as<std::string>(v, fp));
      else if (k == "heuristic") c.heuristic = parse_heuristic(field_as<std::string>(v, fp));
      else if (k == "weight") c.weight = field_as<double>(v, fp);
      else if (k == "tie") c.tie = parse_tie_policy(field_as<std::string>(v, fp));
      else if (k == "reexpand") c.reexpand = field_as<bool>(v, fp);
      else if (k == "branching") c.branching = to_branching_factor(field_as<int>(v, fp));
      else if (k == "three_path") c.three_path = field_as<bool>(v, fp);
      else if (k == "nonuniform") c.nonuniform = field_as<bool>(v, fp);
      else if (k == "name") c.name = field_as<std::string>(v, fp);
      else throw spec_error(fp, "unknown field");
    } catch (const spec_error&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw spec_error(fp, e.what());
    }
  }
  if (!j.contains("algorithm")) throw spec_error(path + ".algorithm", "is required");
  try {
    validate(c);
  } catch (const config_error& e) {
    throw spec_error(path, e.what());
  }
  return c;
}

}  // namespace detail

inline experiment_spec parse_experiment_spec(const nlohmann::json& j) {
  using detail::field_as;
  if (!j.is_object()) throw spec_error("$", "spec must be a JSON object");
  experiment_spec s;
  for (const auto& [k, v] : j.items()) {
    if (k == "grid_kind") {
      const auto g = field_as<std::string>(v, k);
      if (g == "random") s.kind = grid_kind::random;
      else if (g == "map_file") s.kind = grid_kind::map_file;
      else throw spec_error(k, "must be \"random\" or \"map_file\"");
    } else if (k == "map_file") s.map_file = field_as<std::string>(v, k);
    else if (k == "width") s.width = field_as<int>(v, k);
    else if (k == "height") s.height = field_as<int>(v, k);
    else if (k == "percent_blocked") s.percent_blocked = field_as<double>(v, k);
    else if (k == "cost_model") {
      if (!v.is_null()) {
        try {
          s.costs = parse_cost_model(field_as<std::string>(v, k));
        } catch (const std::invalid_argument& e) {
          throw spec_error(k, e.what());
        }
      }
    } else if (k == "instance_count") s.instance_count = field_as<int>(v, k);
    else if (k == "seed") s.seed = field_as<std::uint64_t>(v, k);
    else if (k == "timing") s.timing = field_as<bool>(v, k);
    else if (k == "threads") s.threads = field_as<unsigned>(v, k);
    else if (k == "planners") {
      if (!v.is_array()) throw spec_error(k, "must be an array");
      for (std::size_t i = 0; i < v.size(); ++i)
        s.planners.push_back(detail::parse_planner(v[i], "planners[" + std::to_string(i) + "]"));
    } else
      throw spec_error(k, "unknown field");
  }
  validate(s);
  return s;
}

inline experiment_spec parse_experiment_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw spec_error("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_experiment_spec(j);
}

inline experiment_spec parse_experiment_spec(const char* text) { return parse_experiment_spec(std::string(text)); }

inline planner_config make_planner(algorithm a, bool nonuniform = false) {
  planner_config c;
  c.algo = a;
  c.nonuniform = nonuniform;
  return c;
}

// Desk-scale versions of the random-grid comparison and the
// non-uniform-cost comparison.
inline experiment_spec preset(const std::string& name) {
  experiment_spec s;
  if (name == "table1-small") {
    s.width = s.height = 100;
    s.percent_blocked = 20.0;
    s.instance_count = 100;
    s.seed = 20100;
    for (auto a : {algorithm::astar_grid, algorithm::astar_ps, algorithm::basic_theta, algorithm::ap_theta,
                   algorithm::astar_visgraph})
      s.planners.push_back(make_planner(a));
  } else if (name == "nonuniform-small") {
    s.width = s.height = 200;
    s.percent_blocked = 0.0;
    s.costs = cost_model::half_ones_1_15;
    s.instance_count = 30;
    s.seed = 20101;
    s.planners.push_back(make_planner(algorithm::astar_grid, true));
    s.planners.push_back(make_planner(algorithm::basic_theta, true));
  } else {
    throw spec_error("preset", "unknown preset '" + name + "' (known: table1-small, nonuniform-small)");
  }
  return s;
}

}  // namespace anyangle
