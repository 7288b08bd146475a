#include "fusion/tree_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fusion/errors.hpp"
#include "fusion/gomory_hu.hpp"
#include "fusion/rng.hpp"

namespace fusion {

std::vector<std::size_t> ConstraintMatrix::column_sums() const {
  std::vector<std::size_t> sums(columns, 0);
  for (const auto& row : rows) {
    for (EdgeId j : row) ++sums[j];
  }
  return sums;
}

std::size_t ConstraintMatrix::max_column_sum() const {
  const auto sums = column_sums();
  return sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
}

ConstraintMatrix constraint_matrix(const WeightedGraph& tree, std::span<const VertexSet> forbidden) {
  if (!tree.is_tree()) throw InvalidArgument("constraint matrix: graph is not a tree (use the gomoryhu solver)");
  ConstraintMatrix m;
  m.columns = tree.edge_count();
  for (const VertexSet& f : forbidden) {
    m.rows.push_back(bounded_subtree(tree, f));
  }
  return m;
}

ConstraintMatrix constraint_matrix(const FusionInstance& instance) {
  return constraint_matrix(instance.graph(), instance.forbidden());
}

double harmonic(std::size_t c) {
  double h = 0.0;
  for (std::size_t s = 1; s <= c; ++s) h += 1.0 / static_cast<double>(s);
  return h;
}

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

std::vector<std::vector<std::size_t>> rows_by_column(const ConstraintMatrix& m) {
  std::vector<std::vector<std::size_t>> cols(m.columns);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i].empty()) throw InvalidArgument("set cover: a row has no covering column");
    for (EdgeId j : m.rows[i]) {
      if (j >= m.columns) throw InvalidArgument("set cover: column out of range");
      cols[j].push_back(i);
    }
  }
  return cols;
}

}  // namespace

SetCoverResult greedy_set_cover(const ConstraintMatrix& matrix, std::span<const double> weights,
                                std::uint64_t seed) {
  if (weights.size() != matrix.columns) throw InvalidArgument("set cover: weight count mismatch");
  const auto cols = rows_by_column(matrix);
  Rng rng = Rng::stream(seed, "tree-greedy");
  std::vector<char> covered(matrix.rows.size(), 0);
  std::vector<char> taken(matrix.columns, 0);
  std::size_t remaining = matrix.rows.size();
  SetCoverResult result;
  std::vector<EdgeId> ties;
  while (remaining > 0) {
    double best = std::numeric_limits<double>::infinity();
    ties.clear();
    for (EdgeId j = 0; j < matrix.columns; ++j) {
      if (taken[j]) continue;
      std::size_t gain = 0;
      for (std::size_t i : cols[j]) gain += covered[i] ? 0 : 1;
      if (gain == 0) continue;
      const double score = weights[j] / static_cast<double>(gain);
      if (ties.empty() || (score < best && !near(score, best))) {
        best = score;
        ties.assign(1, j);
      } else if (near(score, best)) {
        ties.push_back(j);
      }
    }
    const EdgeId pick = ties.size() == 1 ? ties.front() : ties[rng.below(ties.size())];
    taken[pick] = 1;
    result.selected.push_back(pick);
    result.cost += weights[pick];
    for (std::size_t i : cols[pick]) {
      if (!covered[i]) {
        covered[i] = 1;
        --remaining;
      }
    }
  }
  return result;
}

SetCoverResult primal_dual_set_cover(const ConstraintMatrix& matrix, std::span<const double> weights,
                                     const PrimalDualOptions& options) {
  if (weights.size() != matrix.columns) throw InvalidArgument("set cover: weight count mismatch");
  const auto cols = rows_by_column(matrix);
  const std::size_t b = matrix.rows.size();
  std::vector<std::size_t> order = options.row_order;
  if (order.empty()) {
    order.resize(b);
    for (std::size_t i = 0; i < b; ++i) order[i] = i;
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == b;
    for (std::size_t i = 0; permutation && i < b; ++i) permutation = sorted[i] == i;
    if (!permutation) throw InvalidArgument("primal-dual: row order is not a permutation");
  }

  std::vector<double> slack(weights.begin(), weights.end());
  std::vector<char> covered(b, 0);
  std::vector<char> taken(matrix.columns, 0);
  std::vector<EdgeId> chosen;
  for (std::size_t i : order) {
    if (covered[i]) continue;
    double raise = std::numeric_limits<double>::infinity();
    for (EdgeId j : matrix.rows[i]) raise = std::min(raise, slack[j]);
    for (EdgeId j : matrix.rows[i]) {
      slack[j] -= raise;
      if (!taken[j] && slack[j] <= 1e-12 * std::max(1.0, weights[j])) {
        taken[j] = 1;
        chosen.push_back(j);
        for (std::size_t r : cols[j]) covered[r] = 1;
      }
    }
  }

  if (options.prune) {
    std::vector<std::size_t> cover_count(b, 0);
    for (EdgeId j : chosen) {
      for (std::size_t r : cols[j]) ++cover_count[r];
    }
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      const EdgeId j = *it;
      const bool redundant = std::all_of(cols[j].begin(), cols[j].end(), [&](std::size_t r) { return cover_count[r] > 1; });
      if (!redundant) continue;
      taken[j] = 0;
      for (std::size_t r : cols[j]) --cover_count[r];
    }
  }

  SetCoverResult result;
  for (EdgeId j : chosen) {
    if (!taken[j]) continue;
    result.selected.push_back(j);
    result.cost += weights[j];
  }
  return result;
}

namespace {

SolveReport tree_report(const FusionInstance& instance, const SetCoverResult& cover, std::string solver,
                        std::uint64_t seed, const Stopwatch& clock) {
  const WeightedGraph& g = instance.graph();
  std::vector<char> deleted(g.edge_count(), 0);
  for (EdgeId j : cover.selected) deleted[j] = 1;
  std::vector<EdgeId> kept;
  for (EdgeId j = 0; j < g.edge_count(); ++j) {
    if (!deleted[j]) kept.push_back(j);
  }
  auto report = make_report(instance, Coloring(component_labels(g, kept)), std::move(solver), seed,
                            clock.elapsed_ms());
  report.metrics["deleted_edges"] = static_cast<double>(cover.selected.size());
  return report;
}

std::vector<double> edge_weights(const WeightedGraph& g) {
  std::vector<double> w;
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  return w;
}

}  // namespace

SolveReport solve_tree_greedy(const FusionInstance& instance, std::uint64_t seed) {
  Stopwatch clock;
  require_valid(instance);
  const auto matrix = constraint_matrix(instance);
  const auto cover = greedy_set_cover(matrix, edge_weights(instance.graph()), seed);
  auto report = tree_report(instance, cover, "tree-greedy", seed, clock);
  report.metrics["max_column_sum"] = static_cast<double>(matrix.max_column_sum());
  return report;
}

SolveReport solve_tree_primal_dual(const FusionInstance& instance, const PrimalDualOptions& options) {
  Stopwatch clock;
  require_valid(instance);
  const auto matrix = constraint_matrix(instance);
  const auto cover = primal_dual_set_cover(matrix, edge_weights(instance.graph()), options);
  auto report = tree_report(instance, cover, "tree-pd", 0, clock);
  report.metrics["max_column_sum"] = static_cast<double>(matrix.max_column_sum());
  return report;
}

}  // namespace fusion
