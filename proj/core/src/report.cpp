#include "fusion/report.hpp"

namespace fusion {

SolveReport make_report(const FusionInstance& instance, Coloring coloring, std::string solver,
                        std::uint64_t seed, std::int64_t runtime_ms) {
  SolveReport r;
  r.solver = std::move(solver);
  r.seed = seed;
  r.subgraph = std::get<SubgraphSolution>(convert(instance, coloring, SolutionForm::subgraph));
  r.matching = std::get<MatchingSolution>(convert(instance, r.subgraph, SolutionForm::matching));
  const Objective obj = evaluate(instance, coloring);
  r.cut_weight = obj.cut_weight;
  r.kept_weight = obj.kept_weight;
  r.color_count = coloring.color_count();
  r.coloring = std::move(coloring);
  r.runtime_ms = runtime_ms;
  return r;
}

}  // namespace fusion
