#pragma once

#include <cstdint>
#include <string_view>

#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion {

// Insert edges heaviest first (equal weights in seeded random order), skipping
// any edge whose insertion would create a component holding a forbidden set.
SolveReport best_in_greedy(const FusionInstance& instance, std::uint64_t seed);

enum class OrderPolicy { given, random, incident_weight, forbidden_degree };

OrderPolicy parse_order_policy(std::string_view name);
std::string_view to_string(OrderPolicy policy);

// Parsimonious hypergraph coloring: each vertex takes the admissible existing
// color with the most same-color incident weight, opening a new color only
// when every existing one would close a forbidden set.
SolveReport greedy_coloring(const FusionInstance& instance, OrderPolicy order, std::uint64_t seed);

// Start from singletons and repeatedly merge the admissible block pair with
// the largest (strictly positive) weight between them.
SolveReport greedy_matching(const FusionInstance& instance, std::uint64_t seed);

}  // namespace fusion
