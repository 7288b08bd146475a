#pragma once

#include <vector>

#include "fusion/graph.hpp"

namespace fusion {

struct CutResult {
  double value = 0.0;
  std::vector<Vertex> source_side;  // sorted
  std::vector<EdgeId> cut_edges;    // sorted
};

// Exact minimum cut separating a set of sources from a set of sinks.
//
// The graph becomes a symmetric flow network plus a super-source and a
// super-sink. Terminal attachments are arcs flagged as unbounded, so no
// finite stand-in for infinity ever enters the arithmetic. Max flow is Dinic's
// algorithm; the source side is the residual reachability set from the
// super-source, and the reported value is recomputed from the original edge
// weights crossing that side.
//
// The network is built once and can be reused for many terminal choices.
// Not thread-safe; use one instance per thread.
class MinCutSolver {
 public:
  explicit MinCutSolver(const WeightedGraph& graph);

  // Checks only that sources/sinks are nonempty, disjoint and in range.
  CutResult solve(std::span<const Vertex> sources, std::span<const Vertex> sinks);

  // Number of solve() calls made so far.
  std::size_t calls() const { return calls_; }

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    double residual;
    bool unbounded;
  };

  void add_arc_pair(std::uint32_t a, std::uint32_t b, double cap_ab, double cap_ba, bool unbounded);
  bool build_levels(std::uint32_t s, std::uint32_t t);
  double blocking_flow(std::uint32_t s, std::uint32_t t);
  double residual(const Arc& arc) const;

  const WeightedGraph* graph_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<Arc>> base_arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  double epsilon_ = 0.0;
  std::size_t calls_ = 0;
};

// Validating entry point: rejects empty or overlapping terminal sets,
// out-of-range vertices and disconnected graphs with InvalidArgument.
CutResult min_st_cut(const WeightedGraph& graph, std::span<const Vertex> sources,
                     std::span<const Vertex> sinks);

}  // namespace fusion
