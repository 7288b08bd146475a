#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/gomoryhu_solver.hpp"
#include "fusion/heuristics.hpp"
#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

struct SolverOptions {
  std::uint64_t seed = 0;
  OrderPolicy order = OrderPolicy::given;
  MergeOptions merge;
  bool unbounded_colors = false;  // brute
  bool prune = true;              // tree-pd
  std::vector<Vertex> terminals;  // multiway
};

// brute, single, two, twocolor, greedy-subgraph, greedy-color, greedy-match,
// tree-greedy, tree-pd, gomoryhu, single-gh, multiway.
const std::vector<std::string>& solver_names();

// Dispatches by name. Solvers without randomness report seed 0. A failed
// two-color search raises NoTwoColoring; unknown names raise InvalidArgument.
SolveReport run_solver(const FusionInstance& instance, std::string_view name, const SolverOptions& options);

}  // namespace fusion
