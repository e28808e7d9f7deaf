// mics: solve, check, generate and benchmark Max Induced C-Subgraph instances.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mics/mics.hpp"
#include "mics/report.hpp"

namespace {

using namespace mics;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct BranchFlags {
  std::string regime = "delta";
  std::string epsilon = "1";
  int jobs = 1;
  int width_cap = 10;
  int small_n_cutoff = 25;
  bool force_branching = false;
  bool memo = false;
  std::optional<long long> t_low, t_high, core_bound;
  std::string strategy = "min-fill";

  void attach(CLI::App* app) {
    app->add_option("--regime", regime, "separator regime: delta or sqrtm")->capture_default_str();
    app->add_option("--epsilon", epsilon, "sparsity exponent, a rational in (0,1]")->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads over core guesses")->capture_default_str();
    app->add_option("--width-cap", width_cap, "largest decomposition width the DP accepts")->capture_default_str();
    app->add_option("--small-n-cutoff", small_n_cutoff, "solve directly at or below this many vertices")
        ->capture_default_str();
    app->add_flag("--force-branching", force_branching, "skip the small-instance shortcut");
    app->add_flag("--memo", memo, "deduplicate residual graphs and cache leaf solves");
    app->add_option("--t-low", t_low, "override the keep-cap threshold");
    app->add_option("--t-high", t_high, "override the branching threshold");
    app->add_option("--core-bound", core_bound, "override the maximum core guess size B");
    app->add_option("--strategy", strategy, "elimination heuristic: min-fill or min-degree")->capture_default_str();
  }

  [[nodiscard]] BranchConfig config() const {
    BranchConfig cfg;
    cfg.regime = parse_regime(regime);
    cfg.epsilon = Rational::parse(epsilon);
    cfg.jobs = jobs;
    cfg.dp.width_cap = width_cap;
    cfg.direct_dp_width_cap = width_cap;
    cfg.small_n_cutoff = small_n_cutoff;
    cfg.force_branching = force_branching;
    cfg.memo = memo;
    cfg.t_low_override = t_low;
    cfg.t_high_override = t_high;
    cfg.core_bound_override = core_bound;
    cfg.strategy = parse_elimination_strategy(strategy);
    return cfg;
  }
};

Graph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_graph(in, format);
}

std::vector<TargetClassSpec> parse_class_list(const std::string& text) {
  if (text == "all") {
    return {TargetClassSpec::edgeless(),      TargetClassSpec::max_degree(1), TargetClassSpec::max_degree(2),
            TargetClassSpec::forest(),        TargetClassSpec::degenerate(1), TargetClassSpec::degenerate(2)};
  }
  std::vector<TargetClassSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(TargetClassSpec::parse(item));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  Solution solution;
  BranchStats stats;
  std::vector<int> widths;
  double wall_time = 0;
};

Outcome run_algorithm(const std::string& algo, const TargetClassSpec& spec, const Graph& g, const BranchConfig& cfg) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  if (algo == "branching") {
    BranchResult r = run(spec, g, cfg);
    out.solution = r.solution;
    out.stats = r.stats;
    if (r.stats.max_dp_width >= 0) out.widths.push_back(r.stats.max_dp_width);
  } else if (algo == "dp") {
    DirectSolve ds = solve_direct(spec, g, cfg.dp, cfg.strategy);
    out.solution = ds.solution;
    out.stats.path = "direct";
    out.stats.dp_calls = 1;
    out.stats.max_dp_width = ds.width;
    out.stats.best_size = ds.solution.size;
    out.widths.push_back(ds.width);
  } else if (algo == "brute") {
    OracleResult o = brute_force_max_induced(g, spec, std::max(20, cfg.small_n_cutoff));
    out.solution = Solution::of(o.witness);
    out.stats.path = "brute";
    out.stats.best_size = o.size;
  } else {
    throw ValidationError("unknown algorithm '" + algo + "' (expected branching, dp or brute)");
  }
  out.wall_time = seconds_since(t0);
  return out;
}

void dump_dp_tables(const std::string& path, const TargetClassSpec& spec, const Graph& g, const BranchConfig& cfg) {
  NiceTreeDecomposition nice = make_nice(heuristic_decomposition(g, cfg.strategy), g);
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot write '" + path + "'");
  if (spec.kind == ClassKind::MaxDegree) {
    DegreeDp run(g, nice, spec.d, cfg.dp);
    dump_tables(os, nice, run.tables());
  } else {
    int d = spec.kind == ClassKind::Edgeless ? 0 : spec.kind == ClassKind::Forest ? 1 : spec.d;
    DegenerateDp run(g, nice, d, cfg.dp);
    dump_tables(os, nice, run.tables());
  }
}

int cmd_solve(const std::string& path, const std::string& cls, const std::string& algo, const std::string& format,
              std::uint64_t seed, const BranchFlags& flags, const std::string& dump_path, const std::string& td_path) {
  const GraphFormat fmt = parse_graph_format(format);
  const TargetClassSpec spec = TargetClassSpec::parse(cls);
  require_supported(spec);
  const Graph g = load_graph(path, fmt);
  const BranchConfig cfg = flags.config();
  std::cerr << "solve: n=" << g.n() << " m=" << g.m() << " class=" << spec.to_string() << " algo=" << algo
            << " seed=" << seed << '\n';

  Outcome o = run_algorithm(algo, spec, g, cfg);
  if (!dump_path.empty()) dump_dp_tables(dump_path, spec, g, cfg);
  if (!td_path.empty()) {
    std::ofstream os(td_path);
    if (!os) throw ValidationError("cannot write '" + td_path + "'");
    write_td(os, heuristic_decomposition(g, cfg.strategy));
  }

  RunReport report;
  report.instance = describe(g, std::string(format_name(fmt)), path);
  report.spec = spec.to_string();
  report.algorithm = algo;
  report.config = echo(cfg, derive_thresholds(cfg, g.n(), spec));
  report.result.size = o.solution.size;
  report.result.witness = o.solution.vertices;
  report.result.certificate_ok = recognize_subset(spec, g, o.solution.vertices);
  report.stats.branching = o.stats;
  report.stats.decomposition_widths = o.widths;
  report.stats.wall_time = o.wall_time;
  std::cout << nlohmann::json(report).dump(2) << '\n';
  if (!report.result.certificate_ok) {
    std::cerr << "solve: witness failed independent verification\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& format, int random_n, double random_p, std::uint64_t seed,
              const std::string& classes, const BranchFlags& flags) {
  if (random_n < 0 && path.empty()) throw ValidationError("check needs an instance file or --random");
  Graph g = random_n >= 0 ? gen::random(random_n, random_p, seed) : load_graph(path, parse_graph_format(format));
  const BranchConfig cfg = flags.config();
  bool all_ok = true;
  for (const auto& spec : parse_class_list(classes)) {
    Outcome b = run_algorithm("branching", spec, g, cfg);
    Outcome d = run_algorithm("dp", spec, g, cfg);
    Outcome o = run_algorithm("brute", spec, g, cfg);
    bool certified = b.solution.certifies(spec, g) && d.solution.certifies(spec, g) && o.solution.certifies(spec, g);
    bool ok = certified && b.solution.size == d.solution.size && d.solution.size == o.solution.size;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << spec.to_string() << " branching=" << b.solution.size
              << " dp=" << d.solution.size << " brute=" << o.solution.size;
    if (!ok) {
      nlohmann::json w{{"branching", b.solution.vertices}, {"dp", d.solution.vertices}, {"brute", o.solution.vertices}};
      std::cout << " witnesses=" << w.dump();
    }
    std::cout << '\n';
  }
  return all_ok ? kExitOk : kExitFail;
}

struct GenFlags {
  int cycle = -1, path = -1, complete = -1, star = -1, random_n = -1, subdivide = -1, validate_ptfree = -1;
  std::string grid;
  bool petersen = false, line = false;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string input, output, format = "dimacs", input_format = "dimacs";
};

int cmd_gen(const GenFlags& f) {
  int chosen = (f.cycle >= 0) + (f.path >= 0) + (f.complete >= 0) + (f.star >= 0) + (f.random_n >= 0) +
               (!f.grid.empty()) + f.petersen + (f.subdivide >= 0) + f.line;
  if (chosen != 1) throw ValidationError("gen needs exactly one generator or transformation");
  Graph g(0);
  if (f.cycle >= 0) g = gen::cycle(f.cycle);
  if (f.path >= 0) g = gen::path(f.path);
  if (f.complete >= 0) g = gen::complete(f.complete);
  if (f.star >= 0) g = gen::star(f.star);
  if (f.random_n >= 0) g = gen::random(f.random_n, f.p, f.seed);
  if (f.petersen) g = gen::petersen();
  if (!f.grid.empty()) {
    auto x = f.grid.find('x');
    if (x == std::string::npos) throw ValidationError("--grid expects RxC");
    g = gen::grid(std::stoi(f.grid.substr(0, x)), std::stoi(f.grid.substr(x + 1)));
  }
  if (f.subdivide >= 0 || f.line) {
    if (f.input.empty()) throw ValidationError("transformations need --input");
    Graph in = load_graph(f.input, parse_graph_format(f.input_format));
    g = f.line ? line_graph(in).graph : subdivide_edges(in, f.subdivide);
  }
  if (f.validate_ptfree >= 1 && has_induced_path(g, f.validate_ptfree)) {
    std::cerr << "gen: output contains an induced path on " << f.validate_ptfree << " vertices\n";
    return kExitFail;
  }
  const GraphFormat fmt = parse_graph_format(f.format);
  if (f.output.empty()) {
    write_graph(std::cout, g, fmt);
  } else {
    std::ofstream os(f.output);
    if (!os) throw ValidationError("cannot write '" + f.output + "'");
    write_graph(os, g, fmt);
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& files, const std::string& format, const std::string& star_family,
              const std::string& algos, const std::string& cls, BranchFlags flags) {
  const TargetClassSpec spec = TargetClassSpec::parse(cls);
  std::vector<std::string> algo_list;
  {
    std::stringstream ss(algos);
    std::string a;
    while (std::getline(ss, a, ',')) algo_list.push_back(a);
  }
  std::vector<Graph> instances;
  for (const auto& f : files) instances.push_back(load_graph(f, parse_graph_format(format)));
  BranchConfig cfg = flags.config();
  if (!star_family.empty()) {
    std::stringstream ss(star_family);
    std::string s;
    while (std::getline(ss, s, ',')) instances.push_back(gen::star(std::stoi(s)));
    // Star runs always branch; the thresholds make the center the only pivot.
    cfg.force_branching = true;
    if (!cfg.t_low_override) cfg.t_low_override = 1;
    if (!cfg.t_high_override) cfg.t_high_override = 2;
    if (!cfg.core_bound_override) cfg.core_bound_override = 0;
  }
  std::cout << "n,algorithm,spec,branch_tree_size,max_width,wall_time\n";
  for (const Graph& g : instances) {
    for (const auto& algo : algo_list) {
      Outcome o = run_algorithm(algo, spec, g, cfg);
      std::cout << g.n() << ',' << algo << ',' << spec.to_string() << ',' << o.stats.branch_nodes << ','
                << o.stats.max_dp_width << ',' << std::fixed << std::setprecision(6) << o.wall_time << '\n';
      std::cout.unsetf(std::ios::floatfield);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum induced subgraphs in sparse hereditary classes"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve one instance and print a JSON report");
  std::string solve_path, cls, algo = "branching", format = "dimacs", dump_path, td_path;
  std::uint64_t seed = 0;
  BranchFlags solve_flags;
  solve->add_option("instance", solve_path, "graph file")->required();
  solve->add_option("--class", cls, "edgeless | max-degree:<d> | forest | degenerate:<d>")->required();
  solve->add_option("--algo", algo, "branching, dp or brute")->capture_default_str();
  solve->add_option("--format", format, "dimacs or edgelist")->capture_default_str();
  solve->add_option("--seed", seed, "recorded in the log; the solvers are deterministic");
  solve->add_option("--dump-tables", dump_path, "write every DP table of a direct run");
  solve->add_option("--td-out", td_path, "write the heuristic tree decomposition (PACE .td)");
  solve_flags.attach(solve);

  auto* check = app.add_subcommand("check", "compare branching, dp and brute force");
  std::string check_path, check_format = "dimacs", classes = "all";
  int random_n = -1;
  double random_p = 0.5;
  std::uint64_t check_seed = 1;
  BranchFlags check_flags;
  check->add_option("instance", check_path, "graph file");
  check->add_option("--format", check_format, "dimacs or edgelist")->capture_default_str();
  check->add_option("--random", random_n, "use a random graph on this many vertices");
  check->add_option("--p", random_p, "edge probability for --random")->capture_default_str();
  check->add_option("--seed", check_seed, "seed for --random")->capture_default_str();
  check->add_option("--class", classes, "comma-separated classes or 'all'")->capture_default_str();
  check_flags.attach(check);

  auto* gen_cmd = app.add_subcommand("gen", "generate or transform an instance");
  GenFlags gf;
  gen_cmd->add_option("--cycle", gf.cycle, "cycle on N vertices");
  gen_cmd->add_option("--path", gf.path, "path on N vertices");
  gen_cmd->add_option("--complete", gf.complete, "complete graph on N vertices");
  gen_cmd->add_option("--grid", gf.grid, "RxC grid");
  gen_cmd->add_option("--star", gf.star, "star with S leaves");
  gen_cmd->add_flag("--petersen", gf.petersen, "Petersen graph");
  gen_cmd->add_option("--random", gf.random_n, "G(n,p) on N vertices");
  gen_cmd->add_option("--p", gf.p, "edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", gf.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--subdivide", gf.subdivide, "replace each edge of --input by a path with S inner vertices");
  gen_cmd->add_flag("--line-graph", gf.line, "line graph of --input");
  gen_cmd->add_option("--input", gf.input, "input graph for transformations");
  gen_cmd->add_option("--input-format", gf.input_format, "format of --input")->capture_default_str();
  gen_cmd->add_option("--validate-ptfree", gf.validate_ptfree, "reject outputs with an induced path on t vertices");
  gen_cmd->add_option("-o,--output", gf.output, "output file (default stdout)");
  gen_cmd->add_option("--format", gf.format, "output format")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "CSV of branch-tree sizes, widths and times");
  std::vector<std::string> bench_files;
  std::string bench_format = "dimacs", star_family, algos = "branching", bench_class = "forest";
  BranchFlags bench_flags;
  bench->add_option("instances", bench_files, "graph files");
  bench->add_option("--format", bench_format, "dimacs or edgelist")->capture_default_str();
  bench->add_option("--star-family", star_family, "comma-separated star sizes, e.g. 8,12,16");
  bench->add_option("--algos", algos, "comma-separated algorithms")->capture_default_str();
  bench->add_option("--class", bench_class, "target class")->capture_default_str();
  bench_flags.attach(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_path, cls, algo, format, seed, solve_flags, dump_path, td_path);
    if (*check) return cmd_check(check_path, check_format, random_n, random_p, check_seed, classes, check_flags);
    if (*gen_cmd) return cmd_gen(gf);
    if (*bench) return cmd_bench(bench_files, bench_format, star_family, algos, bench_class, bench_flags);
  } catch (const UnsupportedClassError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
