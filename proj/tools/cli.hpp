#pragma once

// Command-line front end. Kept in a header so the tests can drive it in-process.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <anyangle/anyangle.hpp>

namespace anyangle::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_no_path = 1;
inline constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline vertex parse_vertex(const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw usage_error("expected X,Y but got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

struct random_request {
  int width, height;
  double percent;
  std::uint64_t seed;
};

// WxH:P:SEED, e.g. 100x100:20:7
inline random_request parse_random(const std::string& s) {
  static const std::regex re(R"((\d+)x(\d+):([0-9]*\.?[0-9]+):(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw usage_error("expected WxH:P:SEED but got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2]), std::stod(m[3]), std::stoull(m[4])};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << data;
}

inline std::string fmt_vertex(vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct plan_args {
  std::string map_file, random, start, goal;
  std::string algo = "basic_theta", heuristic, tie, out = "text", svg;
  double weight = 1.0;
  int branching = 8;
  int cell_size = 24;
  bool reexpand = false, nonuniform = false, three_path = false, show_expanded = false;
};

inline int cmd_plan(const plan_args& a, std::ostream& out, std::ostream& err) {
  std::optional<grid> g;
  std::optional<vertex> start, goal;
  if (!a.map_file.empty()) {
    try {
      g = load_map(read_file(a.map_file));
    } catch (const map_parse_error& e) {
      throw usage_error(a.map_file + ": " + e.what());
    } catch (const grid_error& e) {
      throw usage_error(a.map_file + ": " + e.what());
    }
  } else {
    const auto r = parse_random(a.random);
    auto inst = generate_random_grid(r.width, r.height, r.percent, r.seed);
    start = inst.start;
    goal = inst.goal;
    g = std::move(inst.map);
  }
  if (!a.start.empty()) start = parse_vertex(a.start);
  if (!a.goal.empty()) goal = parse_vertex(a.goal);
  if (!start || !goal) throw usage_error("--start and --goal are required with --map");
  if (!g->in_range(*start)) throw usage_error("start " + fmt_vertex(*start) + " lies outside the grid");
  if (!g->in_range(*goal)) throw usage_error("goal " + fmt_vertex(*goal) + " lies outside the grid");

  planner_config cfg;
  cfg.algo = parse_algorithm(a.algo);
  if (!a.heuristic.empty()) cfg.heuristic = parse_heuristic(a.heuristic);
  if (!a.tie.empty()) cfg.tie = parse_tie_policy(a.tie);
  cfg.weight = a.weight;
  cfg.reexpand = a.reexpand;
  cfg.branching = to_branching_factor(a.branching);
  cfg.nonuniform = a.nonuniform;
  cfg.three_path = a.three_path;
  validate(cfg);

  const path_result r = plan(*g, *start, *goal, cfg, a.show_expanded);

  if (!a.svg.empty()) {
    render_spec rs;
    rs.cell_pixel_size = a.cell_size;
    for (const auto& e : r.trace) rs.expanded.push_back(e.v);
    std::vector<svg_path> paths;
    if (r.found) paths.push_back({r.path, "", false});
    write_file(a.svg, render_svg(*g, paths, rs));
  }

  if (a.out == "json") {
    nlohmann::ordered_json j;
    j["found"] = r.found;
    j["algorithm"] = to_string(cfg.algo);
    nlohmann::ordered_json p = nlohmann::ordered_json::array();
    for (const vertex v : r.path) p.push_back({v.x, v.y});
    j["path"] = p;
    j["length"] = r.length;
    j["cost"] = r.cost;
    j["expansions"] = r.expansions;
    j["heading_changes"] = r.heading_changes;
    j["elapsed_us"] = r.elapsed.count();
    out << j.dump(2) << "\n";
  } else {
    out << "algorithm: " << to_string(cfg.algo) << "\n";
    if (r.found) {
      out << "path:";
      for (const vertex v : r.path) out << ' ' << fmt_vertex(v);
      out << "\n";
      out << "length: " << fmt_double(r.length) << "\n";
      out << "cost: " << fmt_double(r.cost) << "\n";
      out << "heading_changes: " << r.heading_changes << "\n";
    }
    out << "expansions: " << r.expansions << "\n";
    out << "elapsed_us: " << r.elapsed.count() << "\n";
  }
  if (!r.found) {
    err << "no path found\n";
    return exit_no_path;
  }
  return exit_ok;
}

struct bench_args {
  std::string spec_file, preset, csv, summary;
  std::string algos, cost_model;
  int width = 100, height = 100, instances = 10;
  double percent = 20.0;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: keep the value from the experiment file
  bool no_timing = false, nonuniform = false;
};

inline int cmd_bench(const bench_args& a, std::ostream& out, std::ostream&) {
  experiment_spec spec;
  if (!a.spec_file.empty()) {
    spec = parse_experiment_spec(read_file(a.spec_file));
  } else if (!a.preset.empty()) {
    spec = preset(a.preset);
  } else {
    if (a.algos.empty()) throw usage_error("give --spec, --preset or --algos");
    spec.width = a.width;
    spec.height = a.height;
    spec.percent_blocked = a.percent;
    spec.instance_count = a.instances;
    spec.seed = a.seed;
    if (!a.cost_model.empty()) {
      try {
        spec.costs = parse_cost_model(a.cost_model);
      } catch (const std::invalid_argument& e) {
        throw spec_error("cost_model", e.what());
      }
    }
    std::stringstream in(a.algos);
    std::string name;
    for (std::size_t i = 0; std::getline(in, name, ','); ++i) {
      try {
        spec.planners.push_back(make_planner(parse_algorithm(name), a.nonuniform || spec.costs.has_value()));
      } catch (const std::invalid_argument& e) {
        throw spec_error("planners[" + std::to_string(i) + "]", e.what());
      }
    }
  }
  if (a.no_timing) spec.timing = false;
  if (a.threads > 0) spec.threads = a.threads;

  const experiment_report rep = run_experiment(spec);
  if (!a.csv.empty()) write_file(a.csv, to_csv(rep));
  const auto summary = summary_json(rep);
  if (!a.summary.empty()) write_file(a.summary, summary.dump(2) + "\n");

  out << std::left << std::setw(18) << "planner" << std::right << std::setw(14) << "length" << std::setw(14) << "cost"
      << std::setw(14) << "expansions" << std::setw(10) << "turns" << std::setw(14) << "runtime_us" << "\n";
  for (const auto& p : rep.planners)
    out << std::left << std::setw(18) << p.label << std::right << std::fixed << std::setprecision(3) << std::setw(14)
        << p.mean_length << std::setw(14) << p.mean_cost << std::setw(14) << p.mean_expansions << std::setw(10)
        << p.mean_heading_changes << std::setw(14) << p.mean_runtime_us << "\n";
  return exit_ok;
}

struct generate_args {
  std::string size = "100x100", cost_model, out;
  double percent = 20.0;
  std::uint64_t seed = 1;
};

inline int cmd_generate(const generate_args& a, std::ostream& out, std::ostream& err) {
  static const std::regex re(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(a.size, m, re)) throw usage_error("expected --size WxH");
  const int w = std::stoi(m[1]), h = std::stoi(m[2]);
  random_instance inst = a.cost_model.empty()
                             ? generate_random_grid(w, h, a.percent, a.seed)
                             : generate_cost_grid(w, h, parse_cost_model(a.cost_model), a.seed, a.percent);
  const std::string text = a.cost_model.empty() ? to_ascii_map(inst.map) : to_json_map(inst.map);
  if (a.out.empty())
    out << text;
  else
    write_file(a.out, text);
  err << "start " << inst.start.x << "," << inst.start.y << "  goal " << inst.goal.x << "," << inst.goal.y << "\n";
  return exit_ok;
}

struct render_args {
  std::string map_file, svg;
  std::vector<std::string> paths;  // each "x,y x,y ..."
  int cell_size = 24;
};

inline int cmd_render(const render_args& a, std::ostream& out, std::ostream&) {
  grid g = load_map(read_file(a.map_file));
  std::vector<svg_path> paths;
  for (const auto& p : a.paths) {
    svg_path sp;
    std::stringstream in(p);
    std::string tok;
    while (in >> tok) sp.points.push_back(parse_vertex(tok));
    for (const vertex v : sp.points)
      if (!g.in_range(v)) throw usage_error("path vertex " + fmt_vertex(v) + " lies outside the grid");
    paths.push_back(std::move(sp));
  }
  render_spec rs;
  rs.cell_pixel_size = a.cell_size;
  const std::string svg = render_svg(g, paths, rs);
  if (a.svg.empty())
    out << svg;
  else
    write_file(a.svg, svg);
  return exit_ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Any-angle path planning on grids"};
  app.require_subcommand(1);

  plan_args pa;
  auto* plan_cmd = app.add_subcommand("plan", "plan one query");
  auto* src = plan_cmd->add_option_group("source");
  src->add_option("--map", pa.map_file, "ASCII or JSON map file");
  src->add_option("--random", pa.random, "random grid WxH:P:SEED");
  src->require_option(1);
  plan_cmd->add_option("--start", pa.start, "start vertex X,Y");
  plan_cmd->add_option("--goal", pa.goal, "goal vertex X,Y");
  plan_cmd->add_option("--algo", pa.algo, "astar_grid | astar_ps | basic_theta | ap_theta | astar_visgraph");
  plan_cmd->add_option("--heuristic", pa.heuristic, "octile | straight_line");
  plan_cmd->add_option("--weight", pa.weight, "heuristic weight in [0,1]");
  plan_cmd->add_option("--tie", pa.tie, "larger_g | smaller_g");
  plan_cmd->add_flag("--reexpand", pa.reexpand, "allow vertex re-expansion");
  plan_cmd->add_option("--branching", pa.branching, "4, 8 or 16");
  plan_cmd->add_flag("--nonuniform", pa.nonuniform, "use cell traversal costs");
  plan_cmd->add_flag("--three-path", pa.three_path, "also try the grandparent");
  plan_cmd->add_option("--out", pa.out, "text | json")->check(CLI::IsMember({"text", "json"}));
  plan_cmd->add_option("--svg", pa.svg, "write an SVG picture");
  plan_cmd->add_option("--cell-size", pa.cell_size, "SVG pixels per cell");
  plan_cmd->add_flag("--show-expanded", pa.show_expanded, "overlay expanded vertices in the SVG");

  bench_args ba;
  auto* bench_cmd = app.add_subcommand("bench", "run an experiment suite");
  bench_cmd->add_option("--spec", ba.spec_file, "JSON experiment spec");
  bench_cmd->add_option("--preset", ba.preset, "table1-small | nonuniform-small");
  bench_cmd->add_option("--algos", ba.algos, "comma-separated planners (inline spec)");
  bench_cmd->add_option("--width", ba.width);
  bench_cmd->add_option("--height", ba.height);
  bench_cmd->add_option("--percent", ba.percent, "percent of blocked cells");
  bench_cmd->add_option("--cost-model", ba.cost_model, "uniform_1_15 | half_ones_1_15");
  bench_cmd->add_flag("--nonuniform", ba.nonuniform);
  bench_cmd->add_option("--instances", ba.instances);
  bench_cmd->add_option("--seed", ba.seed);
  bench_cmd->add_option("--threads", ba.threads);
  bench_cmd->add_flag("--no-timing", ba.no_timing, "write elapsed_us as 0 (byte-identical reruns)");
  bench_cmd->add_option("--csv", ba.csv, "per-instance CSV");
  bench_cmd->add_option("--summary", ba.summary, "JSON summary");

  generate_args ga;
  auto* gen_cmd = app.add_subcommand("generate", "write a random grid");
  gen_cmd->add_option("--size", ga.size, "WxH");
  gen_cmd->add_option("--percent", ga.percent);
  gen_cmd->add_option("--seed", ga.seed);
  gen_cmd->add_option("--cost-model", ga.cost_model, "write a JSON cost grid");
  gen_cmd->add_option("--out", ga.out, "output file (default stdout)");

  render_args ra;
  auto* render_cmd = app.add_subcommand("render", "draw a map and optional paths as SVG");
  render_cmd->add_option("--map", ra.map_file)->required();
  render_cmd->add_option("--path", ra.paths, "\"x,y x,y ...\" (repeatable)");
  render_cmd->add_option("--svg", ra.svg, "output file (default stdout)");
  render_cmd->add_option("--cell-size", ra.cell_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*plan_cmd) return cmd_plan(pa, out, err);
    if (*bench_cmd) return cmd_bench(ba, out, err);
    if (*gen_cmd) return cmd_generate(ga, out, err);
    if (*render_cmd) return cmd_render(ra, out, err);
  } catch (const experiment_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_no_path;
  } catch (const std::invalid_argument& e) {  // config, spec, grid and argument errors
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const map_parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace anyangle::cli
