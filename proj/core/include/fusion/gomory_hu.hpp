#pragma once

#include <span>
#include <vector>

#include "fusion/graph.hpp"

namespace fusion {

// Spanning tree on the vertices of a source graph whose path minima equal the
// pairwise min-cut values of that graph. Edges are in canonical (u, v) order
// so that the tree's WeightedGraph view assigns EdgeId i to edges[i].
struct GomoryHuTree {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  WeightedGraph as_graph(std::span<const std::string> labels) const;
  WeightedGraph as_graph() const;
  // Minimum edge weight on the unique u-v path; u != v.
  double path_min(Vertex u, Vertex v) const;
};

// Gusfield's construction: n - 1 max-flow computations on the original graph,
// with the parent swap that makes the result a cut tree rather than only a
// flow-equivalent tree. Deterministic for a fixed vertex ordering.
GomoryHuTree gomory_hu(const WeightedGraph& graph);

// Edges of the minimal subtree spanning terminals, found by repeatedly pruning
// leaves that are not terminals. Requires a tree and |terminals| >= 2.
std::vector<EdgeId> bounded_subtree(const WeightedGraph& tree, std::span<const Vertex> terminals);

// Same edge set via an auxiliary vertex joined to every terminal: the answer is
// the 2-core of the augmented graph without the auxiliary edges.
std::vector<EdgeId> bounded_subtree_two_core(const WeightedGraph& tree,
                                             std::span<const Vertex> terminals);

}  // namespace fusion
