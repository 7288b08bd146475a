#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/instance.hpp"

namespace fusion {

enum class LogBase { natural, two, ten };

struct GenSpec {
  std::size_t nodes = 60;
  std::size_t edges = 90;
  std::uint64_t seed = 0;
  std::string weight_dist = "uniform01";
  LogBase log_base = LogBase::natural;
};

LogBase parse_log_base(std::string_view name);

// b = ceil(log n) forbidden sets for a target of n nodes.
std::size_t forbidden_set_count(std::size_t nodes, LogBase base = LogBase::natural);
// a = ceil(0.75 b) "bad" vertices.
std::size_t bad_vertex_count(std::size_t forbidden_sets);

inline constexpr std::size_t kPairingRestarts = 100;

// Random instance:
//  1. degrees D_i = 1 + X_i with X ~ Multinomial(2m - n, uniform over n);
//     stubs are paired at random, redrawing a partner that would give a loop
//     or a repeated edge, with a full restart when a stub gets stuck;
//  2. the largest component is kept, weights are iid Uniform(0, 1);
//  3. b forbidden sets, each one uniform bad vertex plus two distinct uniform
//     good vertices; repeated sets are redrawn.
// Bit-identical for a given spec. Vertex labels are "v<k>" for the k-th
// (0-based) vertex of the generated graph before component extraction.
FusionInstance random_instance(const GenSpec& spec);

// Named fixtures: FIX-PATH (optionally "FIX-PATH:<b>"), FIX-GH-TREE,
// FIX-2FS-TREE, FIX-SINGLE, FIX-MERGE, FIX-GREEDY-TRAP.
FusionInstance fixture(std::string_view name);
FusionInstance fixture_path(double b = 3.0);
std::vector<std::string> fixture_names();
bool is_fixture_name(std::string_view name);

}  // namespace fusion
