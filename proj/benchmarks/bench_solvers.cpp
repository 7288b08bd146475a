#include <benchmark/benchmark.h>

#include "fusion/generator.hpp"
#include "fusion/gomory_hu.hpp"
#include "fusion/max_flow.hpp"
#include "fusion/solve.hpp"

namespace {

fusion::FusionInstance generated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return fusion::random_instance({.nodes = n, .edges = n + n / 2, .seed = 1});
}

void BM_MinCut(benchmark::State& state) {
  const auto inst = generated(state);
  const auto& g = inst.graph();
  const std::vector<fusion::Vertex> s{0}, t{static_cast<fusion::Vertex>(g.vertex_count() - 1)};
  for (auto _ : state) {
    fusion::MinCutSolver solver(g);
    benchmark::DoNotOptimize(solver.solve(s, t).value);
  }
}
BENCHMARK(BM_MinCut)->RangeMultiplier(4)->Range(64, 4096);

void BM_GomoryHu(benchmark::State& state) {
  const auto inst = generated(state);
  for (auto _ : state) benchmark::DoNotOptimize(fusion::gomory_hu(inst.graph()).edges.data());
}
BENCHMARK(BM_GomoryHu)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_Solver(benchmark::State& state, const char* name) {
  const auto inst = generated(state);
  fusion::SolverOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(fusion::run_solver(inst, name, options).cut_weight);
}
BENCHMARK_CAPTURE(BM_Solver, gomoryhu, "gomoryhu")->Arg(60)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solver, greedy_color, "greedy-color")->Arg(60)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solver, twocolor, "twocolor")->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
