#pragma once

#include <span>
#include <vector>

#include "fusion/graph.hpp"
#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

// A forest in which no tree holds two terminals.
struct TerminalForest {
  std::vector<EdgeId> kept_edges;  // sorted
  VertexSet terminals;
};

struct MultiwayResult {
  TerminalForest forest;
  double forest_weight = 0.0;
  // Components of the forest and the graph weight crossing them. This is a
  // multiway cut of the terminals, but maximizing forest weight is a different
  // objective from minimizing cut weight, so it need not be a minimum one.
  Partition partition;
  double cut_weight = 0.0;
};

// Best-in greedy over the multiway-cut cycle matroid: scan edges by weight
// (descending; ties in canonical edge order) and keep an edge unless it closes
// a cycle or joins two terminal-bearing trees. Yields a maximum-weight member.
// Requires 2 <= |T| < |V|, no edge inside T and a connected graph.
MultiwayResult multiway_greedy_forest(const WeightedGraph& graph, std::span<const Vertex> terminals);

// True iff kept_edges is a forest with at most one terminal per tree.
bool is_terminal_forest(const WeightedGraph& graph, std::span<const EdgeId> kept_edges,
                        std::span<const Vertex> terminals);

// Wraps the greedy forest as a report against the multiway-cut fusion instance.
SolveReport solve_multiway(const WeightedGraph& graph, std::span<const Vertex> terminals);

}  // namespace fusion
