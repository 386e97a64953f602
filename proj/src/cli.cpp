#include "lomuf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lomuf/bench.hpp"
#include "lomuf/directed.hpp"
#include "lomuf/fixtures.hpp"
#include "lomuf/io.hpp"
#include "lomuf/locate.hpp"
#include "lomuf/oracle.hpp"

namespace lomuf {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spill(const std::string& path, std::ostream& out,
           const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open output file '" + path + "'");
  f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ThreeDM parse_triples(const std::string& text) {
  ThreeDM dm;
  std::set<std::string> xs, ys, zs;
  for (const std::string& part : split(text, ',')) {
    auto fields = split(part, ':');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty())
      throw ValidationError("bad triple '" + part +
                            "', expected x:y:z");
    dm.triples.push_back({fields[0], fields[1], fields[2]});
    xs.insert(fields[0]);
    ys.insert(fields[1]);
    zs.insert(fields[2]);
  }
  dm.x.assign(xs.begin(), xs.end());
  dm.y.assign(ys.begin(), ys.end());
  dm.z.assign(zs.begin(), zs.end());
  return dm;
}

std::vector<long long> parse_ints(const std::string& text) {
  std::vector<long long> out;
  for (const std::string& part : split(text, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError("bad integer '" + part + "'");
    }
  }
  return out;
}

std::string solution_csv(const Solution& sol) {
  std::ostringstream csv;
  csv << "commodity,target\n";
  for (size_t i = 0; i < sol.commodities.size(); ++i)
    csv << sol.commodities[i] << ','
        << (sol.targets[i] ? *sol.targets[i] : std::string("unplaced"))
        << '\n';
  csv << "lambda,"
      << (sol.lambda.is_unbounded() ? std::string("unbounded")
                                    : std::to_string(sol.lambda.value()))
      << '\n';
  return csv.str();
}

struct Options {
  std::string input = "-";
  std::string output = "-";
  double tolerance = kSatisfyTol;
  std::string format = "json";
};

void emit_solution(const Options& opt, std::ostream& out,
                   const Instance& inst, const Solution& sol) {
  spill(opt.output, out,
        opt.format == "csv" ? solution_csv(sol)
                            : serialize_solution(inst, sol));
}

std::vector<DemandVector> demands_for(const Instance& inst,
                                      const std::vector<std::string>& targets) {
  std::vector<DemandVector> ds;
  for (size_t i = 0; i < inst.commodities.size(); ++i)
    ds.push_back(
        target_demand(inst.graph, inst.commodities[i].supply, targets[i]));
  return ds;
}

Solution solve_fixed_targets(const Instance& inst,
                             const std::vector<std::string>& targets,
                             const std::string& solver, double tolerance) {
  ConcurrentResult r = solve_concurrent(inst.graph, demands_for(inst, targets));
  Solution sol;
  sol.commodities = inst.commodity_names();
  for (const auto& t : targets) sol.targets.emplace_back(t);
  sol.lambda = r.lambda;
  sol.objective = r.lambda;
  if (r.lambda.is_unbounded())
    for (size_t i = 0; i < targets.size(); ++i)
      r.witness.flows.push_back(Flow::zero(inst.graph));
  sol.flows = std::move(r.witness);
  sol.solver = solver;
  sol.tolerance = tolerance;
  return sol;
}

int do_solve(const Options& opt, const std::string& algo, int rounds,
             std::istream& in, std::ostream& out) {
  Instance inst = parse_instance(slurp(opt.input, in));
  auto supplies = inst.supplies();
  if (supplies.empty()) throw ValidationError("instance has no commodities");

  if (algo == "tree") {
    auto r = locate_tree(inst.graph, supplies);
    emit_solution(opt, out, inst,
                  solve_fixed_targets(inst, r.targets, "tree", opt.tolerance));
  } else if (algo == "master") {
    auto targets = locate_master_source(supplies);
    emit_solution(
        opt, out, inst,
        solve_fixed_targets(inst, targets, "master", opt.tolerance));
  } else if (algo == "sym-ditree" || algo == "sym-digraph") {
    DirectedLocateResult r = algo == "sym-ditree"
                                 ? locate_symmetric_ditree(inst.graph, supplies)
                                 : locate_symmetric_digraph(inst.graph,
                                                            supplies);
    Solution sol;
    sol.commodities = inst.commodity_names();
    for (const auto& t : r.targets) sol.targets.emplace_back(t);
    sol.lambda = r.lambda;
    sol.objective = r.lambda;
    sol.flows = std::move(r.flows);
    sol.solver = algo;
    sol.tolerance = opt.tolerance;
    emit_solution(opt, out, inst, sol);
  } else if (algo == "restricted") {
    std::vector<std::string> cands =
        inst.candidates ? *inst.candidates : inst.graph.sorted_vertices();
    auto targets = locate_restricted(inst.graph, supplies, cands, rounds);
    emit_solution(
        opt, out, inst,
        solve_fixed_targets(inst, targets, "restricted", opt.tolerance));
  } else {
    throw ValidationError("unknown algorithm '" + algo + "'");
  }
  return 0;
}

int do_mcf(const Options& opt, const std::string& targets_csv,
           const std::string& objective, std::istream& in,
           std::ostream& out) {
  Instance inst = parse_instance(slurp(opt.input, in));
  auto targets = split(targets_csv, ',');
  if (targets.size() != inst.commodities.size())
    throw ValidationError("expected " +
                          std::to_string(inst.commodities.size()) +
                          " targets, got " + std::to_string(targets.size()));
  for (const auto& t : targets) inst.graph.vertex_index(t);

  if (objective == "concurrent") {
    emit_solution(opt, out, inst,
                  solve_fixed_targets(inst, targets, "mcf", opt.tolerance));
  } else if (objective == "total") {
    TotalResult r = solve_total(inst.graph, inst.supplies(), targets);
    Solution sol;
    sol.commodities = inst.commodity_names();
    for (const auto& t : targets) sol.targets.emplace_back(t);
    double lmin = r.lambdas.empty()
                      ? 0.0
                      : *std::min_element(r.lambdas.begin(), r.lambdas.end());
    sol.lambda = Lambda::finite(lmin);
    sol.objective = Lambda::finite(r.objective);
    sol.lambdas = r.lambdas;
    sol.flows = std::move(r.witness);
    sol.solver = "mcf-total";
    sol.tolerance = opt.tolerance;
    emit_solution(opt, out, inst, sol);
  } else {
    throw ValidationError("unknown objective '" + objective + "'");
  }
  return 0;
}

int do_oracle(const Options& opt, const std::string& variant,
              const OracleBudget& budget, std::istream& in,
              std::ostream& out) {
  Instance inst = parse_instance(slurp(opt.input, in));
  Solution sol;
  sol.commodities = inst.commodity_names();
  sol.solver = "oracle-" + variant;
  sol.tolerance = opt.tolerance;

  if (variant == "lomuf") {
    OracleResult r =
        oracle_lomuf(inst.graph, inst.supplies(), inst.candidates, budget);
    for (const auto& t : r.targets) sol.targets.emplace_back(t);
    sol.lambda = r.lambda;
    sol.objective = r.lambda;
    sol.flows = std::move(r.witness);
  } else if (variant == "total") {
    TotalOracleResult r = oracle_total(inst.graph, inst.supplies(), budget);
    for (const auto& t : r.targets) sol.targets.emplace_back(t);
    double lmin = r.lambdas.empty()
                      ? 0.0
                      : *std::min_element(r.lambdas.begin(), r.lambdas.end());
    sol.lambda = Lambda::finite(lmin);
    sol.objective = Lambda::finite(r.objective);
    sol.lambdas = r.lambdas;
    sol.flows = std::move(r.witness);
  } else if (variant == "maxf") {
    MaxfResult r = oracle_maxf(inst.graph, inst.supplies(), budget);
    sol.targets = r.targets;
    sol.lambda = r.subset_lambda;
    sol.objective = Lambda::finite(static_cast<double>(r.zeta));
    sol.flows = std::move(r.witness);
  } else if (variant == "unsplittable") {
    OracleResult r = oracle_unsplittable(inst.graph, inst.supplies(),
                                         inst.candidates, budget);
    for (const auto& t : r.targets) sol.targets.emplace_back(t);
    sol.lambda = r.lambda;
    sol.objective = r.lambda;
    sol.flows = std::move(r.witness);
  } else {
    throw ValidationError("unknown oracle variant '" + variant + "'");
  }
  if (sol.flows.flows.empty())
    for (size_t i = 0; i < sol.commodities.size(); ++i)
      sol.flows.flows.push_back(Flow::zero(inst.graph));
  if (sol.targets.empty())
    sol.targets.assign(sol.commodities.size(), std::nullopt);
  emit_solution(opt, out, inst, sol);
  return 0;
}

int do_reduce(const Options& opt, const std::string& gadget,
              std::istream& in, std::ostream& out) {
  Instance inst = parse_instance(slurp(opt.input, in));
  Instance reduced = inst;
  if (gadget == "diamond") {
    DiamondMap map = diamond_expand(inst.graph);
    reduced.graph = map.expanded;
    reduced.meta["reduction"] = "diamond";
  } else if (gadget == "induced") {
    reduced.graph = induced_undirected(inst.graph);
    reduced.meta["reduction"] = "induced";
  } else {
    throw ValidationError("unknown gadget '" + gadget + "'");
  }
  spill(opt.output, out, serialize_instance(reduced));
  return 0;
}

struct GenerateArgs {
  std::string fixture;
  std::string triples;
  std::string set;
  int m = 0;
  std::string graph_vertices;
  std::string graph_edges;
  int n = 5;
  int k = 2;
  double p = 0.4;
  int max_sources = 3;
  int cap_min = 1;
  int cap_max = 10;
  int cap = 1;
  std::uint64_t seed = 0;
};

int do_generate(const Options& opt, const GenerateArgs& ga,
                std::ostream& out) {
  Instance inst = [&]() -> Instance {
    if (ga.fixture == "3dm") return gen_3dm_lomuf(parse_triples(ga.triples));
    if (ga.fixture == "3dm-di")
      return gen_3dm_dilomuf(parse_triples(ga.triples));
    if (ga.fixture == "3dm-rtree")
      return gen_3dm_restricted_tree(parse_triples(ga.triples));
    if (ga.fixture == "3part-path")
      return gen_3partition_dipath(parse_ints(ga.set), ga.m);
    if (ga.fixture == "3part-star")
      return gen_3partition_star(parse_ints(ga.set), ga.m);
    if (ga.fixture == "mis") {
      SimpleGraph sg;
      sg.vertices = split(ga.graph_vertices, ',');
      if (!ga.graph_edges.empty())
        for (const auto& e : split(ga.graph_edges, ',')) {
          auto uv = split(e, '-');
          if (uv.size() != 2)
            throw ValidationError("bad edge '" + e + "', expected u-v");
          sg.edges.emplace_back(uv[0], uv[1]);
        }
      return gen_mis_maxf(sg);
    }
    if (ga.fixture == "random-tree")
      return gen_random_tree(ga.n, ga.k, ga.max_sources, ga.cap_min,
                             ga.cap_max, ga.seed);
    if (ga.fixture == "random-graph")
      return gen_random_graph(ga.n, ga.p, ga.k, ga.max_sources, ga.cap_min,
                              ga.cap_max, ga.seed);
    if (ga.fixture == "random-sym-digraph")
      return gen_random_symmetric_digraph(ga.n, ga.p, ga.k, ga.max_sources,
                                          ga.cap, ga.seed);
    throw ValidationError("unknown fixture '" + ga.fixture + "'");
  }();
  spill(opt.output, out, serialize_instance(inst));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Target location for multi-commodity flow"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tolerance", opt.tolerance, "Numeric tolerance")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto add_io = [&](CLI::App* cmd, bool needs_output) {
    cmd->add_option("-i,--input", opt.input, "Instance file, - for stdin");
    if (needs_output)
      cmd->add_option("-o,--output", opt.output, "Output file, - for stdout");
  };

  auto* solve = app.add_subcommand("solve", "Run a target-location algorithm");
  std::string algo;
  int rounds = 3;
  solve->add_option("--algo", algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember(
          {"tree", "master", "sym-ditree", "sym-digraph", "restricted"}));
  solve->add_option("--rounds", rounds, "Coordinate-ascent sweeps")
      ->capture_default_str();
  add_io(solve, true);

  auto* mcf = app.add_subcommand("mcf", "Fixed-target LP");
  std::string targets_csv;
  std::string objective = "concurrent";
  mcf->add_option("--targets", targets_csv,
                  "Comma-separated target per commodity")
      ->required();
  mcf->add_option("--objective", objective, "LP objective")
      ->check(CLI::IsMember({"concurrent", "total"}))
      ->capture_default_str();
  add_io(mcf, true);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground truth");
  std::string variant;
  OracleBudget budget;
  oracle->add_option("--variant", variant, "Problem variant")
      ->required()
      ->check(CLI::IsMember({"lomuf", "total", "maxf", "unsplittable"}));
  oracle->add_option("--budget", budget.max_lp_calls, "Max LP calls")
      ->capture_default_str();
  oracle->add_option("--max-paths", budget.max_paths,
                     "Max unsplittable path assignments")
      ->capture_default_str();
  add_io(oracle, true);

  auto* reduce = app.add_subcommand("reduce", "Graph reductions");
  std::string gadget;
  reduce->add_option("--gadget", gadget, "Reduction")
      ->required()
      ->check(CLI::IsMember({"diamond", "induced"}));
  add_io(reduce, true);

  auto* generate = app.add_subcommand("generate", "Instance generators");
  GenerateArgs ga;
  generate->add_option("--fixture", ga.fixture, "Fixture family")
      ->required()
      ->check(CLI::IsMember({"3dm", "3dm-di", "3part-path", "3dm-rtree",
                             "3part-star", "mis", "random-tree",
                             "random-graph", "random-sym-digraph"}));
  generate->add_option("--w", ga.triples, "Triples x:y:z,x:y:z,...");
  generate->add_option("--set", ga.set, "3-partition multiset 1,1,2,...");
  generate->add_option("--m", ga.m, "3-partition part count");
  generate->add_option("--graph-vertices", ga.graph_vertices,
                       "MIS vertices a,b,c");
  generate->add_option("--graph-edges", ga.graph_edges, "MIS edges a-b,b-c");
  generate->add_option("--n", ga.n, "Vertex count")->capture_default_str();
  generate->add_option("--k", ga.k, "Commodity count")->capture_default_str();
  generate->add_option("--p", ga.p, "Extra-edge probability")
      ->capture_default_str();
  generate->add_option("--max-sources", ga.max_sources, "Max sources")
      ->capture_default_str();
  generate->add_option("--cap-min", ga.cap_min, "Min capacity")
      ->capture_default_str();
  generate->add_option("--cap-max", ga.cap_max, "Max capacity")
      ->capture_default_str();
  generate->add_option("--cap", ga.cap, "Symmetric arc capacity")
      ->capture_default_str();
  generate->add_option("--seed", ga.seed, "PRNG seed")->capture_default_str();
  add_io(generate, true);

  auto* bench = app.add_subcommand("bench", "Locator benchmark CSV");
  int trials = 10;
  std::uint64_t bench_seed = 0;
  std::string csv_path = "-";
  std::string family = "mixed";
  bench->add_option("--trials", trials, "Trial count")->capture_default_str();
  bench->add_option("--seed", bench_seed, "PRNG seed")->capture_default_str();
  bench->add_option("--csv", csv_path, "CSV output path, - for stdout")
      ->capture_default_str();
  bench->add_option("--family", family, "Instance family")
      ->check(CLI::IsMember({"trees", "bisource", "general", "mixed"}))
      ->capture_default_str();
  bench->add_option("--budget", budget.max_lp_calls, "Oracle LP budget")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (solve->parsed()) return do_solve(opt, algo, rounds, in, out);
    if (mcf->parsed()) return do_mcf(opt, targets_csv, objective, in, out);
    if (oracle->parsed()) return do_oracle(opt, variant, budget, in, out);
    if (reduce->parsed()) return do_reduce(opt, gadget, in, out);
    if (generate->parsed()) return do_generate(opt, ga, out);
    if (bench->parsed()) {
      spill(csv_path, out,
            bench_report(trials, bench_seed,
                         bench_family_from_string(family), budget));
      return 0;
    }
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace lomuf
