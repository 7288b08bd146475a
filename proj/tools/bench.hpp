#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/generator.hpp"

namespace fusion::cli {

struct BenchSize {
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

// "60x90,64x192" -> {{60,90},{64,192}}
std::vector<BenchSize> parse_sizes(const std::string& text);

struct BenchCell {
  std::string solver;
  std::optional<double> cut_weight;  // empty when the solver failed
  double seconds = 0.0;
  bool feasible = false;
  std::string error;
};

struct BenchRow {
  BenchSize target;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t forbidden = 0;
  std::vector<BenchCell> cells;  // in solver order
};

struct BenchConfig {
  std::vector<BenchSize> sizes;
  std::vector<std::string> solvers{"twocolor", "gomoryhu"};
  std::uint64_t seed = 0;
  LogBase log_base = LogBase::natural;
};

// One generated instance per size (seeded by config.seed), every solver run on
// it in turn. Rows follow the order of config.sizes.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// format is "csv" or "md". Columns: nodes, edges, forbidden, then
// <solver>_cut and <solver>_ms per solver; failures print n/a.
std::string format_bench(const std::vector<BenchRow>& rows, const std::vector<std::string>& solvers,
                         const std::string& format);

}  // namespace fusion::cli
