#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fusion/gomory_hu.hpp"
#include "fusion/instance.hpp"
#include "fusion/report.hpp"

namespace fusion::io {

// Instance file:
//   {"vertices":["v1",...],
//    "edges":[{"u":"v1","v":"v2","w":0.5},...],
//    "forbidden":[["v1","v2","v3"],...]}
FusionInstance parse_instance(std::string_view json_text);
std::string instance_to_json(const FusionInstance& instance);

// Solution file as written by `solve`:
//   {"solver","seed","coloring":{label:color},"removed_edges":[[u,v],...],
//    "cut_weight","kept_weight","color_count","runtime_ms"}
std::string report_to_json(const FusionInstance& instance, const SolveReport& report);

// Output of `convert`: {"form": ..., <form payload>, "cut_weight", "kept_weight"}
// with payload "coloring", "kept_edges" + "removed_edges", or "blocks".
std::string solution_to_json(const FusionInstance& instance, const Solution& solution);

struct ParsedSolution {
  Solution solution;
  // Present when a coloring file also lists removed edges; lets callers check
  // that the two agree.
  std::optional<SubgraphSolution> listed_subgraph;
};

// Reads any of the above. The form is taken from "coloring", then "blocks",
// then "kept_edges", then "removed_edges". Unknown labels raise InvalidArgument.
ParsedSolution parse_solution(const FusionInstance& instance, std::string_view json_text);

// {"vertices":[...],"edges":[{"u","v","w"},...]}
std::string tree_to_json(const WeightedGraph& graph, const GomoryHuTree& tree);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fusion::io
