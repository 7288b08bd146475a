#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "fusion/gomory_hu.hpp"
#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

// Bookkeeping of the splitting phase over the edges of a Gomory-Hu tree.
struct SplitState {
  std::vector<char> deleted;                  // per tree edge
  std::vector<char> connected;                // per forbidden set
  std::vector<std::size_t> removed;           // tree edge indices, in deletion order
  std::vector<std::vector<std::size_t>> sets_on_edge;  // forbidden sets whose subtree uses the edge

  // Number of still-connected forbidden sets the edge would disconnect.
  std::size_t newly_disconnected(std::size_t edge) const;
};

struct SplitResult {
  std::vector<std::size_t> removed;  // tree edge indices, in deletion order
  Coloring coloring;                 // tree components after the deletions
  double tree_cost = 0.0;            // sum of removed tree weights
};

// Deletes, one at a time, the undeleted tree edge with the least
// weight / newly-disconnected ratio until every forbidden set is split.
// Ratio ties within relative 1e-12 use the seeded "gh-split" stream.
SplitResult iterative_splitting(const GomoryHuTree& tree, std::span<const VertexSet> forbidden,
                                std::uint64_t seed);

// Color classes as nodes of a fusion sub-problem: theta is the instance
// weight between two classes; a group of classes is forbidden when their union
// would hold a forbidden set.
struct MergeGraph {
  std::size_t class_count = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> theta;  // only theta > 0
  std::vector<VertexSet> forbidden;  // antichain over class indices
};

MergeGraph build_merge_graph(const FusionInstance& instance, const Coloring& coloring);

enum class MergeMode { exhaustive, greedy, off };

MergeMode parse_merge_mode(std::string_view name);

struct MergeOptions {
  MergeMode mode = MergeMode::exhaustive;
  // Above this many classes, exhaustive mode falls back to greedy merging.
  std::size_t exhaustive_threshold = 12;
};

// Merges color classes without making any forbidden set monochromatic.
// The result is never more expensive than the input. Improper input raises
// InvalidArgument.
Coloring merge_colors(const FusionInstance& instance, const Coloring& coloring,
                      const MergeOptions& options = {});

// Gomory-Hu tree, iterative splitting, transfer to the instance, color merging.
// At most b times the optimum cost.
SolveReport solve_gomory_hu(const FusionInstance& instance, std::uint64_t seed,
                            const MergeOptions& options = {});

// Single forbidden set F: cut the lightest tree edge of F's bounded subtree.
SolveReport solve_single_via_gh(const FusionInstance& instance);

}  // namespace fusion
