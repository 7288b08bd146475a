#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusion/graph.hpp"
#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

// Sparse b x m incidence of forbidden sets (rows) against tree edges
// (columns): row i lists the edges whose removal disconnects F_i.
struct ConstraintMatrix {
  std::size_t columns = 0;
  std::vector<std::vector<EdgeId>> rows;  // each sorted

  std::vector<std::size_t> column_sums() const;
  std::size_t max_column_sum() const;
};

// Rows are the bounded subtrees of each forbidden set. Non-tree input raises
// InvalidArgument.
ConstraintMatrix constraint_matrix(const FusionInstance& instance);
ConstraintMatrix constraint_matrix(const WeightedGraph& tree, std::span<const VertexSet> forbidden);

// Harmonic number H_c = 1 + 1/2 + ... + 1/c.
double harmonic(std::size_t c);

struct SetCoverResult {
  std::vector<EdgeId> selected;  // in selection order
  double cost = 0.0;
};

// Repeatedly picks the column minimizing weight / (uncovered rows it covers);
// near-equal scores (relative 1e-12) are broken by the seeded stream. Cost is
// at most H_c times optimal, c the max column sum.
SetCoverResult greedy_set_cover(const ConstraintMatrix& matrix, std::span<const double> weights,
                                std::uint64_t seed);

struct PrimalDualOptions {
  bool prune = true;
  // Order in which uncovered rows have their duals raised; empty means 0..b-1.
  std::vector<std::size_t> row_order;
};

// Dual ascent: raise the dual of the next uncovered row until some column goes
// tight, take every tight column of that row, repeat. Optionally drops
// redundant columns in reverse order of entry. Cost is at most c times optimal.
SetCoverResult primal_dual_set_cover(const ConstraintMatrix& matrix, std::span<const double> weights,
                                     const PrimalDualOptions& options = {});

// Tree instances: delete the selected edges; the components form the coloring.
SolveReport solve_tree_greedy(const FusionInstance& instance, std::uint64_t seed);
SolveReport solve_tree_primal_dual(const FusionInstance& instance, const PrimalDualOptions& options = {});

}  // namespace fusion
