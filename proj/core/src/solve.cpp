#include "fusion/solve.hpp"

#include <algorithm>

#include "fusion/errors.hpp"
#include "fusion/exact.hpp"
#include "fusion/multiway.hpp"
#include "fusion/tree_solver.hpp"

namespace fusion {

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names{
      "brute",       "single",  "two",      "twocolor",  "greedy-subgraph", "greedy-color",
      "greedy-match", "tree-greedy", "tree-pd", "gomoryhu", "single-gh",       "multiway"};
  return names;
}

SolveReport run_solver(const FusionInstance& instance, std::string_view name, const SolverOptions& options) {
  if (name == "brute") return brute_force(instance, {options.unbounded_colors});
  if (name == "single") return solve_single_forbidden(instance);
  if (name == "two") return solve_two_forbidden(instance);
  if (name == "twocolor") {
    auto report = two_color_exhaustive(instance);
    if (!report) throw NoTwoColoring("twocolor: the forbidden sets admit no proper 2-coloring");
    return *std::move(report);
  }
  if (name == "greedy-subgraph") return best_in_greedy(instance, options.seed);
  if (name == "greedy-color") return greedy_coloring(instance, options.order, options.seed);
  if (name == "greedy-match") return greedy_matching(instance, options.seed);
  if (name == "tree-greedy") return solve_tree_greedy(instance, options.seed);
  if (name == "tree-pd") {
    PrimalDualOptions pd;
    pd.prune = options.prune;
    return solve_tree_primal_dual(instance, pd);
  }
  if (name == "gomoryhu") return solve_gomory_hu(instance, options.seed, options.merge);
  if (name == "single-gh") return solve_single_via_gh(instance);
  if (name == "multiway") {
    if (options.terminals.empty()) throw InvalidArgument("multiway: --terminals is required");
    return solve_multiway(instance.graph(), options.terminals);
  }
  throw InvalidArgument("unknown solver '" + std::string(name) + "'");
}

}  // namespace fusion
