#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fusion/instance.hpp"

namespace fusion {

// Outcome of one solver run, holding the solution in all three forms.
struct SolveReport {
  std::string solver;
  std::uint64_t seed = 0;
  Coloring coloring;
  SubgraphSolution subgraph;
  MatchingSolution matching;
  double cut_weight = 0.0;
  double kept_weight = 0.0;
  std::size_t color_count = 0;
  std::int64_t runtime_ms = 0;
  // Solver-specific diagnostics (cut-call counts, tree costs, ...). Not part
  // of the solution file.
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;
};

SolveReport make_report(const FusionInstance& instance, Coloring coloring, std::string solver,
                        std::uint64_t seed, std::int64_t runtime_ms);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fusion
