#include "fusion/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "fusion/errors.hpp"
#include "fusion/max_flow.hpp"

namespace fusion {

namespace {

constexpr double kTieTolerance = 1e-9;

class PartitionSearch {
 public:
  PartitionSearch(std::size_t n, std::span<const Edge> edges, std::span<const VertexSet> forbidden,
                  std::size_t max_blocks)
      : n_(n), max_blocks_(std::max<std::size_t>(1, max_blocks)), back_edges_(n), closing_(n), labels_(n) {
    for (const Edge& e : edges) {
      const Vertex hi = std::max(e.u, e.v);
      back_edges_[hi].push_back({std::min(e.u, e.v), e.weight});
    }
    for (const VertexSet& f : forbidden) {
      if (f.empty()) continue;
      closing_[*std::max_element(f.begin(), f.end())].push_back(&f);
    }
  }

  std::optional<PartitionOptimum> run() {
    if (n_ == 0) return PartitionOptimum{};
    descend(0, 0, 0.0);
    if (!found_) return std::nullopt;
    return PartitionOptimum{best_labels_, best_cost_};
  }

 private:
  void descend(std::size_t v, std::uint32_t used, double partial) {
    if (v == n_) {
      if (!found_ || partial < best_cost_ - kTieTolerance) {
        found_ = true;
        best_cost_ = partial;
        best_labels_ = labels_;
      }
      return;
    }
    const std::uint32_t limit = std::min<std::uint32_t>(used + 1, static_cast<std::uint32_t>(max_blocks_));
    for (std::uint32_t c = 0; c < limit; ++c) {
      double cost = partial;
      for (auto [u, w] : back_edges_[v]) {
        if (labels_[u] != c) cost += w;
      }
      if (found_ && cost >= best_cost_ - kTieTolerance) continue;
      labels_[v] = c;
      bool feasible = true;
      for (const VertexSet* f : closing_[v]) {
        if (std::all_of(f->begin(), f->end(), [&](Vertex x) { return labels_[x] == c; })) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      descend(v + 1, std::max(used, c + 1), cost);
    }
  }

  std::size_t n_;
  std::size_t max_blocks_;
  std::vector<std::vector<std::pair<Vertex, double>>> back_edges_;
  std::vector<std::vector<const VertexSet*>> closing_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> best_labels_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  bool found_ = false;
};

// Coloring from a min cut: 0 on the source side, 1 elsewhere.
Coloring side_coloring(std::size_t n, const CutResult& cut) {
  std::vector<std::uint32_t> colors(n, 1);
  for (Vertex v : cut.source_side) colors[v] = 0;
  return Coloring(std::move(colors));
}

void require_connected(const FusionInstance& instance, const char* who) {
  if (!instance.graph().is_connected()) {
    throw InvalidArgument(std::string(who) + ": graph is disconnected");
  }
}

}  // namespace

std::size_t color_bound(std::size_t b) {
  auto t = static_cast<std::size_t>(std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(b))) / 2.0));
  // Guard the floating estimate against rounding at perfect squares.
  while (t * (t - 1) > 2 * b) --t;
  while ((t + 1) * t <= 2 * b) ++t;
  return t;
}

std::optional<PartitionOptimum> optimal_partition(std::size_t n, std::span<const Edge> edges,
                                                  std::span<const VertexSet> forbidden,
                                                  std::size_t max_blocks) {
  return PartitionSearch(n, edges, forbidden, max_blocks).run();
}

SolveReport brute_force(const FusionInstance& instance, BruteForceOptions options) {
  Stopwatch clock;
  require_valid(instance);
  const std::size_t n = instance.graph().vertex_count();
  if (n > kBruteForceVertexLimit) {
    throw SizeLimitError("brute force: " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(kBruteForceVertexLimit));
  }
  const std::size_t blocks = options.unbounded_colors ? n : color_bound(instance.forbidden_count());
  auto best = optimal_partition(n, instance.graph().edges(), instance.forbidden(), blocks);
  if (!best) throw InvalidArgument("brute force: no feasible partition");
  auto report = make_report(instance, Coloring(std::move(best->labels)), "brute", 0, clock.elapsed_ms());
  report.metrics["max_blocks"] = static_cast<double>(blocks);
  return report;
}

SolveReport solve_single_forbidden(const FusionInstance& instance) {
  Stopwatch clock;
  require_valid(instance);
  if (instance.forbidden_count() != 1) {
    throw InvalidArgument("single forbidden set solver needs exactly one forbidden set");
  }
  require_connected(instance, "single forbidden set solver");
  const VertexSet& f = instance.forbidden().front();
  const std::size_t k = f.size();
  if (k > 30) throw SizeLimitError("single forbidden set solver: |F| > 30");

  MinCutSolver solver(instance.graph());
  std::optional<CutResult> best;
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (2 * size > k) continue;
    // Equal halves: keep the representative holding the smallest vertex.
    if (2 * size == k && !(mask & 1)) continue;
    sources.clear();
    sinks.clear();
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? sources : sinks).push_back(f[i]);
    CutResult cut = solver.solve(sources, sinks);
    if (!best || cut.value < best->value - kTieTolerance) best = std::move(cut);
  }
  auto report = make_report(instance, side_coloring(instance.graph().vertex_count(), *best), "single", 0,
                            clock.elapsed_ms());
  report.metrics["cut_calls"] = static_cast<double>(solver.calls());
  return report;
}

SolveReport solve_two_forbidden(const FusionInstance& instance) {
  Stopwatch clock;
  require_valid(instance);
  if (instance.forbidden_count() == 1) {
    auto report = solve_single_forbidden(instance);
    report.solver = "two";
    return report;
  }
  if (instance.forbidden_count() != 2) throw InvalidArgument("two forbidden set solver needs exactly two forbidden sets");
  require_connected(instance, "two forbidden set solver");
  const VertexSet& f0 = instance.forbidden()[0];
  const VertexSet& f1 = instance.forbidden()[1];
  VertexSet all;
  std::set_union(f0.begin(), f0.end(), f1.begin(), f1.end(), std::back_inserter(all));
  const std::size_t u = all.size();
  if (u > kTwoColorUnionLimit) throw SizeLimitError("two forbidden set solver: |F u F'| > 24");

  auto in = [](const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  MinCutSolver solver(instance.graph());
  std::optional<CutResult> best;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  // all[0] always on side A, so each unordered split is visited once.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (u - 1)); ++mask) {
    a.assign(1, all[0]);
    b.clear();
    for (std::size_t i = 1; i < u; ++i) ((mask >> (i - 1)) & 1 ? b : a).push_back(all[i]);
    auto meets = [&](const std::vector<Vertex>& side, const VertexSet& f) {
      return std::any_of(side.begin(), side.end(), [&](Vertex v) { return in(f, v); });
    };
    if (!meets(a, f0) || !meets(a, f1) || !meets(b, f0) || !meets(b, f1)) continue;
    CutResult cut = solver.solve(a, b);
    if (!best || cut.value < best->value - kTieTolerance) best = std::move(cut);
  }
  if (!best) throw InvalidArgument("two forbidden set solver: no admissible split");
  auto report = make_report(instance, side_coloring(instance.graph().vertex_count(), *best), "two", 0,
                            clock.elapsed_ms());
  report.metrics["cut_calls"] = static_cast<double>(solver.calls());
  return report;
}

std::optional<SolveReport> two_color_exhaustive(const FusionInstance& instance) {
  Stopwatch clock;
  require_valid(instance);
  const std::size_t n = instance.graph().vertex_count();
  if (instance.forbidden_count() == 0) {
    auto report = make_report(instance, Coloring(std::vector<std::uint32_t>(n, 0)), "twocolor", 0,
                              clock.elapsed_ms());
    report.metrics["proper_colorings"] = 1;
    return report;
  }
  require_connected(instance, "two-color search");
  VertexSet x;
  for (const VertexSet& f : instance.forbidden()) x.insert(x.end(), f.begin(), f.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.size() > kTwoColorUnionLimit) {
    throw SizeLimitError("two-color search: union of forbidden sets has " + std::to_string(x.size()) +
                         " vertices, limit " + std::to_string(kTwoColorUnionLimit));
  }

  // Forbidden sets as bit masks over positions in x.
  std::vector<std::uint32_t> set_masks;
  for (const VertexSet& f : instance.forbidden()) {
    std::uint32_t m = 0;
    for (Vertex v : f) m |= 1u << (std::lower_bound(x.begin(), x.end(), v) - x.begin());
    set_masks.push_back(m);
  }

  MinCutSolver solver(instance.graph());
  std::optional<CutResult> best;
  std::size_t proper = 0;
  std::vector<Vertex> zeros;
  std::vector<Vertex> ones;
  // Bit i set means x[i] gets color 1; x[0] is pinned to color 0.
  const std::uint32_t limit = 1u << (x.size() - 1);
  for (std::uint32_t half = 0; half < limit; ++half) {
    const std::uint32_t ones_mask = half << 1;
    const bool ok = std::all_of(set_masks.begin(), set_masks.end(), [&](std::uint32_t m) {
      return (ones_mask & m) != 0 && (ones_mask & m) != m;
    });
    if (!ok) continue;
    ++proper;
    zeros.clear();
    ones.clear();
    for (std::size_t i = 0; i < x.size(); ++i) ((ones_mask >> i) & 1 ? ones : zeros).push_back(x[i]);
    CutResult cut = solver.solve(zeros, ones);
    if (!best || cut.value < best->value - kTieTolerance) best = std::move(cut);
  }
  if (!best) return std::nullopt;
  auto report = make_report(instance, side_coloring(n, *best), "twocolor", 0, clock.elapsed_ms());
  report.metrics["proper_colorings"] = static_cast<double>(proper);
  return report;
}

}  // namespace fusion
