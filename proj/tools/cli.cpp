#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "fusion/errors.hpp"
#include "fusion/exact.hpp"
#include "fusion/generator.hpp"
#include "fusion/gomory_hu.hpp"
#include "fusion/io.hpp"
#include "fusion/solve.hpp"

namespace fusion::cli {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FUSION_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("FUSION_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

FusionInstance load_instance(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::parse_instance(io::read_file(arg));
  if (is_fixture_name(arg)) return fixture(arg);
  throw InvalidArgument("no instance file or fixture named '" + arg + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

struct SolveArgs {
  std::string instance;
  std::string solver;
  std::uint64_t seed = 0;
  std::string output;
  std::string order = "given";
  std::string merge = "exhaustive";
  std::size_t merge_threshold = 12;
  bool unbounded_colors = false;
  bool no_prune = false;
  std::string terminals;
};

struct EvalArgs {
  std::string instance;
  std::string solution;
};

struct ConvertArgs {
  std::string instance;
  std::string solution;
  std::string to;
  std::string output;
};

struct TreeArgs {
  std::string instance;
  std::string output;
};

struct GenerateArgs {
  std::size_t nodes = 60;
  std::size_t edges = 90;
  std::uint64_t seed = 0;
  std::string weight_dist = "uniform01";
  std::string log_base = "e";
  std::string output;
};

struct BenchArgs {
  std::string sizes = "60x90";
  std::string solvers = "twocolor,gomoryhu";
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string log_base = "e";
  std::string output;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const FusionInstance instance = load_instance(a.instance);
  SolverOptions options;
  options.seed = a.seed;
  options.order = parse_order_policy(a.order);
  options.merge.mode = parse_merge_mode(a.merge);
  options.merge.exhaustive_threshold = a.merge_threshold;
  options.unbounded_colors = a.unbounded_colors;
  options.prune = !a.no_prune;
  for (const auto& label : split_list(a.terminals)) {
    const auto v = instance.graph().find_vertex(label);
    if (!v) throw InvalidArgument("unknown terminal '" + label + "'");
    options.terminals.push_back(*v);
  }
  SolveReport report = run_solver(instance, a.solver, options);
  if (a.solver == "twocolor" && instance.graph().vertex_count() <= kBruteForceVertexLimit) {
    const SolveReport exact = brute_force(instance);
    const bool same = std::abs(exact.cut_weight - report.cut_weight) <= 1e-9;
    report.notes.push_back(std::string("brute force optimum ") + (same ? "matches" : "differs") +
                           " (brute " + std::to_string(exact.cut_weight) + ")");
  }
  for (const auto& note : report.notes) err << "note: " << note << "\n";
  emit(io::report_to_json(instance, report), a.output, out);
  return kExitOk;
}

int do_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const FusionInstance instance = load_instance(a.instance);
  const io::ParsedSolution parsed = io::parse_solution(instance, io::read_file(a.solution));
  const bool feasible = is_feasible(instance, parsed.solution);
  const Objective obj = evaluate(instance, parsed.solution);
  bool consistent = true;
  if (feasible && parsed.listed_subgraph) {
    const auto implied = std::get<SubgraphSolution>(convert(instance, parsed.solution, SolutionForm::subgraph));
    consistent = implied == *parsed.listed_subgraph;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "feasible: %s\ncut_weight: %.17g\nkept_weight: %.17g\n", feasible ? "yes" : "no",
                obj.cut_weight, obj.kept_weight);
  out << buf;
  if (!consistent) {
    err << "error: removed_edges disagree with the coloring\n";
    return kExitInfeasible;
  }
  if (!feasible) {
    err << "error: a component or color class contains a forbidden set\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int do_convert(const ConvertArgs& a, std::ostream& out) {
  const FusionInstance instance = load_instance(a.instance);
  const io::ParsedSolution parsed = io::parse_solution(instance, io::read_file(a.solution));
  SolutionForm target = SolutionForm::coloring;
  if (a.to == "subgraph") target = SolutionForm::subgraph;
  if (a.to == "matching") target = SolutionForm::matching;
  emit(io::solution_to_json(instance, convert(instance, parsed.solution, target)), a.output, out);
  return kExitOk;
}

int do_gomoryhu(const TreeArgs& a, std::ostream& out) {
  const FusionInstance instance = load_instance(a.instance);
  const GomoryHuTree tree = gomory_hu(instance.graph());
  emit(io::tree_to_json(instance.graph(), tree), a.output, out);
  return kExitOk;
}

int do_generate(const GenerateArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.nodes = a.nodes;
  spec.edges = a.edges;
  spec.seed = a.seed;
  spec.weight_dist = a.weight_dist;
  spec.log_base = parse_log_base(a.log_base);
  emit(io::instance_to_json(random_instance(spec)), a.output, out);
  return kExitOk;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config;
  config.sizes = parse_sizes(a.sizes);
  config.solvers = split_list(a.solvers);
  config.seed = a.seed;
  config.log_base = parse_log_base(a.log_base);
  const auto unknown = std::find_if(config.solvers.begin(), config.solvers.end(), [](const std::string& s) {
    const auto& names = solver_names();
    return std::find(names.begin(), names.end(), s) == names.end();
  });
  if (unknown != config.solvers.end()) throw InvalidArgument("unknown solver '" + *unknown + "'");
  emit(format_bench(run_bench(config), config.solvers, a.format), a.output, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial data fusion solvers", "fusion"};
  app.require_subcommand(1);

  std::uint64_t seed_default = 0;
  try {
    seed_default = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SolveArgs solve_args;
  solve_args.seed = seed_default;
  auto* solve = app.add_subcommand("solve", "solve an instance and print a solution report");
  solve->add_option("instance", solve_args.instance, "instance file or fixture name")->required();
  solve->add_option("--solver", solve_args.solver, "solver name")
      ->required()
      ->check(CLI::IsMember(solver_names()));
  solve->add_option("--seed", solve_args.seed, "tie-breaking seed (default $FUSION_SEED or 0)");
  solve->add_option("-o,--output", solve_args.output, "write the report here instead of stdout");
  solve->add_option("--order", solve_args.order, "greedy-color vertex order")
      ->check(CLI::IsMember({"given", "random", "incident-weight", "forbidden-degree"}));
  solve->add_option("--merge", solve_args.merge, "gomoryhu color merging")
      ->check(CLI::IsMember({"exhaustive", "greedy", "off"}));
  solve->add_option("--merge-threshold", solve_args.merge_threshold, "largest class count merged exhaustively");
  solve->add_flag("--unbounded-colors", solve_args.unbounded_colors, "brute: ignore the color bound");
  solve->add_flag("--no-prune", solve_args.no_prune, "tree-pd: skip reverse deletion");
  solve->add_option("--terminals", solve_args.terminals, "multiway: comma-separated terminal labels");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "check feasibility and recompute objectives");
  eval->add_option("instance", eval_args.instance)->required();
  eval->add_option("solution", eval_args.solution)->required();

  ConvertArgs convert_args;
  auto* conv = app.add_subcommand("convert", "convert a solution between the three forms");
  conv->add_option("instance", convert_args.instance)->required();
  conv->add_option("solution", convert_args.solution)->required();
  conv->add_option("--to", convert_args.to)->required()->check(CLI::IsMember({"coloring", "subgraph", "matching"}));
  conv->add_option("-o,--output", convert_args.output);

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("gomoryhu", "emit a Gomory-Hu tree of the instance graph");
  tree->add_option("instance", tree_args.instance)->required();
  tree->add_option("-o,--output", tree_args.output);

  GenerateArgs gen_args;
  gen_args.seed = seed_default;
  auto* gen = app.add_subcommand("generate", "generate a random instance");
  gen->add_option("--nodes", gen_args.nodes)->required();
  gen->add_option("--edges", gen_args.edges)->required();
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--weight-dist", gen_args.weight_dist)->check(CLI::IsMember({"uniform01"}));
  gen->add_option("--log-base", gen_args.log_base, "base of the log in b = ceil(log n)")
      ->check(CLI::IsMember({"e", "2", "10"}));
  gen->add_option("-o,--output", gen_args.output);

  BenchArgs bench_args;
  bench_args.seed = seed_default;
  auto* bench = app.add_subcommand("bench", "run solvers on generated instances and tabulate");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated NODESxEDGES");
  bench->add_option("--solvers", bench_args.solvers, "comma-separated solver names");
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--format", bench_args.format)->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--log-base", bench_args.log_base)->check(CLI::IsMember({"e", "2", "10"}));
  bench->add_option("-o,--output", bench_args.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve) return do_solve(solve_args, out, err);
    if (*eval) return do_eval(eval_args, out, err);
    if (*conv) return do_convert(convert_args, out);
    if (*tree) return do_gomoryhu(tree_args, out);
    if (*gen) return do_generate(gen_args, out);
    if (*bench) return do_bench(bench_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitUsage;
}

}  // namespace fusion::cli
