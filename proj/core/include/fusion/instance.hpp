#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fusion/graph.hpp"

namespace fusion {

using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

// A weighted graph together with the family of forbidden vertex sets.
// Each forbidden set is normalized (sorted, deduplicated) and the family is
// sorted with identical sets collapsed. Construction never throws on
// semantic problems; call validate() or require_valid().
class FusionInstance {
 public:
  FusionInstance() = default;
  FusionInstance(WeightedGraph graph, std::vector<VertexSet> forbidden);

  const WeightedGraph& graph() const { return graph_; }
  std::span<const VertexSet> forbidden() const { return forbidden_; }
  std::size_t forbidden_count() const { return forbidden_.size(); }

  // Indices of forbidden sets containing v.
  std::span<const std::uint32_t> sets_containing(Vertex v) const;

 private:
  WeightedGraph graph_;
  std::vector<VertexSet> forbidden_;
  std::vector<std::vector<std::uint32_t>> membership_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FusionInstance& instance);
// Throws InvalidArgument listing the violations; warnings are ignored.
void require_valid(const FusionInstance& instance);

// Vertex -> color, normalized so colors are 0..t-1 in first-appearance order.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<std::uint32_t> colors);

  std::span<const std::uint32_t> colors() const { return colors_; }
  std::uint32_t operator[](Vertex v) const { return colors_.at(v); }
  std::size_t size() const { return colors_.size(); }
  std::size_t color_count() const { return count_; }
  Partition classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> colors_;
  std::size_t count_ = 0;
};

struct SubgraphSolution {
  std::vector<EdgeId> kept_edges;  // sorted, duplicate-free
  friend bool operator==(const SubgraphSolution&, const SubgraphSolution&) = default;
};

struct MatchingSolution {
  Partition blocks;  // canonical
  friend bool operator==(const MatchingSolution&, const MatchingSolution&) = default;
};

using Solution = std::variant<Coloring, SubgraphSolution, MatchingSolution>;

enum class SolutionForm { coloring, subgraph, matching };

struct Objective {
  double cut_weight = 0.0;
  double kept_weight = 0.0;
};

Objective evaluate(const FusionInstance& instance, const Solution& solution);
bool is_feasible(const FusionInstance& instance, const Solution& solution);
// Infeasible input raises InvalidArgument.
Solution convert(const FusionInstance& instance, const Solution& solution, SolutionForm target);

// Group label per vertex: color, component, or block index.
std::vector<std::uint32_t> groups_of(const FusionInstance& instance, const Solution& solution);

// True iff no group (as given by per-vertex labels) contains a forbidden set.
bool groups_feasible(const FusionInstance& instance, std::span<const std::uint32_t> groups);
double cut_weight_of(const WeightedGraph& graph, std::span<const std::uint32_t> groups);

// Multi-multiway cut: every pair inside each terminal group becomes forbidden.
FusionInstance mmc_to_fusion(const WeightedGraph& graph,
                             std::span<const std::vector<Vertex>> terminal_groups);

}  // namespace fusion
