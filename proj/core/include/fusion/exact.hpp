#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

// Largest t with t(t - 1) <= 2b: some optimum coloring never needs more.
std::size_t color_bound(std::size_t forbidden_count);

inline constexpr std::size_t kBruteForceVertexLimit = 12;
inline constexpr std::size_t kTwoColorUnionLimit = 24;

struct PartitionOptimum {
  std::vector<std::uint32_t> labels;  // restricted growth string
  double cut_weight = 0.0;
};

// Depth-first enumeration of set partitions of {0..n-1} as restricted growth
// strings in lexicographic order, limited to max_blocks blocks. A partial
// assignment is abandoned as soon as it completes a forbidden block or its
// cut weight can no longer beat the incumbent by more than 1e-9, so ties keep
// the lexicographically smallest labelling. Returns nullopt if nothing is
// feasible. Edges may join any pair; no connectivity is assumed.
std::optional<PartitionOptimum> optimal_partition(std::size_t n, std::span<const Edge> edges,
                                                  std::span<const VertexSet> forbidden,
                                                  std::size_t max_blocks);

struct BruteForceOptions {
  bool unbounded_colors = false;
};

// Exact optimum by partition enumeration; |V| <= 12.
SolveReport brute_force(const FusionInstance& instance, BruteForceOptions options = {});

// Exactly one forbidden set F: the best of 2^{|F|-1} - 1 terminal min cuts.
// metrics["cut_calls"] records the count.
SolveReport solve_single_forbidden(const FusionInstance& instance);

// Exactly two forbidden sets (one after deduplication is routed to the single
// set method): min cuts over the two-block splits of F u F' meeting both sets
// on both sides.
SolveReport solve_two_forbidden(const FusionInstance& instance);

// Best proper 2-coloring of the union X of the forbidden sets, each extended to
// V by a terminal min cut. nullopt when (X, F) has no proper 2-coloring.
// metrics["proper_colorings"] counts the colorings tried.
std::optional<SolveReport> two_color_exhaustive(const FusionInstance& instance);

}  // namespace fusion
