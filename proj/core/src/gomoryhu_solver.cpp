#include "fusion/gomoryhu_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "fusion/errors.hpp"
#include "fusion/exact.hpp"
#include "fusion/rng.hpp"
#include "forbidden_tracker.hpp"

namespace fusion {

std::size_t SplitState::newly_disconnected(std::size_t edge) const {
  std::size_t count = 0;
  for (std::size_t f : sets_on_edge[edge]) count += connected[f] ? 1 : 0;
  return count;
}

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

Coloring tree_components(const WeightedGraph& tree_graph, const std::vector<char>& deleted) {
  std::vector<EdgeId> kept;
  for (EdgeId id = 0; id < tree_graph.edge_count(); ++id) {
    if (!deleted[id]) kept.push_back(id);
  }
  return Coloring(component_labels(tree_graph, kept));
}

}  // namespace

SplitResult iterative_splitting(const GomoryHuTree& tree, std::span<const VertexSet> forbidden,
                                std::uint64_t seed) {
  const WeightedGraph tg = tree.as_graph();
  if (!tg.is_tree() || tg.vertex_count() != tree.vertex_count) {
    throw InvalidArgument("iterative splitting: input is not a spanning tree");
  }
  SplitState state;
  state.deleted.assign(tg.edge_count(), 0);
  state.connected.assign(forbidden.size(), 1);
  state.sets_on_edge.assign(tg.edge_count(), {});
  for (std::size_t f = 0; f < forbidden.size(); ++f) {
    if (forbidden[f].size() < 2) throw InvalidArgument("iterative splitting: forbidden set of size < 2");
    const auto subtree = bounded_subtree(tg, forbidden[f]);
    if (subtree.empty()) throw std::logic_error("iterative splitting: empty bounded subtree");
    for (EdgeId e : subtree) state.sets_on_edge[e].push_back(f);
  }

  Rng rng = Rng::stream(seed, "gh-split");
  std::size_t remaining = forbidden.size();
  SplitResult result;
  std::vector<std::size_t> ties;
  while (remaining > 0) {
    double best = std::numeric_limits<double>::infinity();
    ties.clear();
    for (std::size_t e = 0; e < tg.edge_count(); ++e) {
      if (state.deleted[e]) continue;
      const std::size_t phi = state.newly_disconnected(e);
      if (phi == 0) continue;
      const double ratio = tg.edge(static_cast<EdgeId>(e)).weight / static_cast<double>(phi);
      if (ties.empty() || (ratio < best && !near(ratio, best))) {
        best = ratio;
        ties.assign(1, e);
      } else if (near(ratio, best)) {
        ties.push_back(e);
      }
    }
    const std::size_t pick = ties.size() == 1 ? ties.front() : ties[rng.below(ties.size())];
    state.deleted[pick] = 1;
    state.removed.push_back(pick);
    result.tree_cost += tg.edge(static_cast<EdgeId>(pick)).weight;
    for (std::size_t f : state.sets_on_edge[pick]) {
      if (state.connected[f]) {
        state.connected[f] = 0;
        --remaining;
      }
    }
  }
  result.removed = state.removed;
  result.coloring = tree_components(tg, state.deleted);
  return result;
}

MergeGraph build_merge_graph(const FusionInstance& instance, const Coloring& coloring) {
  if (!is_feasible(instance, coloring)) throw InvalidArgument("merge: coloring is not proper");
  MergeGraph m;
  m.class_count = coloring.color_count();
  for (const Edge& e : instance.graph().edges()) {
    std::uint32_t a = coloring[e.u];
    std::uint32_t b = coloring[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    m.theta[{a, b}] += e.weight;
  }
  std::set<VertexSet> groups;
  for (const VertexSet& f : instance.forbidden()) {
    VertexSet classes;
    for (Vertex v : f) classes.push_back(coloring[v]);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    groups.insert(std::move(classes));
  }
  // Keep only minimal groups.
  for (const VertexSet& g : groups) {
    const bool minimal = std::none_of(groups.begin(), groups.end(), [&](const VertexSet& h) {
      return h != g && h.size() <= g.size() && std::includes(g.begin(), g.end(), h.begin(), h.end());
    });
    if (minimal) m.forbidden.push_back(g);
  }
  return m;
}

MergeMode parse_merge_mode(std::string_view name) {
  if (name == "exhaustive") return MergeMode::exhaustive;
  if (name == "greedy") return MergeMode::greedy;
  if (name == "off") return MergeMode::off;
  throw InvalidArgument("unknown merge mode '" + std::string(name) + "'");
}

namespace {

std::vector<std::uint32_t> greedy_merge(const MergeGraph& m) {
  std::vector<std::uint32_t> group(m.class_count);
  for (std::uint32_t i = 0; i < m.class_count; ++i) group[i] = i;
  detail::ForbiddenTracker tracker(m.class_count, group, m.forbidden);
  auto theta = m.theta;
  while (true) {
    const std::pair<std::uint32_t, std::uint32_t>* best = nullptr;
    double best_w = 0.0;
    for (const auto& [pair, w] : theta) {
      if (w > best_w && tracker.can_merge(pair.first, pair.second)) {
        best_w = w;
        best = &pair;
      }
    }
    if (!best) break;
    const auto [keep, gone] = *best;
    tracker.merge(keep, gone);
    for (auto& g : group) {
      if (g == gone) g = keep;
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> next;
    for (const auto& [pair, w] : theta) {
      std::uint32_t a = pair.first == gone ? keep : pair.first;
      std::uint32_t b = pair.second == gone ? keep : pair.second;
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      next[{a, b}] += w;
    }
    theta = std::move(next);
  }
  return group;
}

}  // namespace

Coloring merge_colors(const FusionInstance& instance, const Coloring& coloring, const MergeOptions& options) {
  const MergeGraph m = build_merge_graph(instance, coloring);
  if (options.mode == MergeMode::off || m.class_count <= 1) return coloring;

  std::vector<std::uint32_t> class_group;
  if (options.mode == MergeMode::exhaustive && m.class_count <= options.exhaustive_threshold) {
    std::vector<Edge> edges;
    for (const auto& [pair, w] : m.theta) edges.push_back({pair.first, pair.second, w});
    double current = 0.0;
    for (const Edge& e : edges) current += e.weight;
    const auto best = optimal_partition(m.class_count, edges, m.forbidden, color_bound(m.forbidden.size()));
    // Equal-cost alternatives would only fold classes with no weight between them.
    if (!best || !(best->cut_weight < current - 1e-9)) return coloring;
    class_group = best->labels;
  } else {
    class_group = greedy_merge(m);
  }
  std::vector<std::uint32_t> colors(coloring.size());
  for (Vertex v = 0; v < coloring.size(); ++v) colors[v] = class_group[coloring[v]];
  Coloring merged(std::move(colors));
  if (evaluate(instance, merged).cut_weight > evaluate(instance, coloring).cut_weight + 1e-9) {
    throw std::logic_error("merge increased the cut weight");
  }
  return merged;
}

SolveReport solve_gomory_hu(const FusionInstance& instance, std::uint64_t seed, const MergeOptions& options) {
  Stopwatch clock;
  require_valid(instance);
  const std::size_t n = instance.graph().vertex_count();
  if (instance.forbidden_count() == 0 || n < 2) {
    return make_report(instance, Coloring(std::vector<std::uint32_t>(n, 0)), "gomoryhu", seed, clock.elapsed_ms());
  }
  const GomoryHuTree tree = gomory_hu(instance.graph());
  const SplitResult split = iterative_splitting(tree, instance.forbidden(), seed);
  const double split_cost = evaluate(instance, split.coloring).cut_weight;
  Coloring merged = merge_colors(instance, split.coloring, options);
  auto report = make_report(instance, std::move(merged), "gomoryhu", seed, clock.elapsed_ms());
  report.metrics["tree_cost"] = split.tree_cost;
  report.metrics["split_cost"] = split_cost;
  report.metrics["split_colors"] = static_cast<double>(split.coloring.color_count());
  report.metrics["removed_tree_edges"] = static_cast<double>(split.removed.size());
  return report;
}

SolveReport solve_single_via_gh(const FusionInstance& instance) {
  Stopwatch clock;
  require_valid(instance);
  if (instance.forbidden_count() != 1) throw InvalidArgument("single-set Gomory-Hu solver needs exactly one forbidden set");
  const GomoryHuTree tree = gomory_hu(instance.graph());
  const WeightedGraph tg = tree.as_graph();
  const auto subtree = bounded_subtree(tg, instance.forbidden().front());
  EdgeId lightest = subtree.front();
  for (EdgeId e : subtree) {
    if (tg.edge(e).weight < tg.edge(lightest).weight) lightest = e;
  }
  std::vector<char> deleted(tg.edge_count(), 0);
  deleted[lightest] = 1;
  auto report = make_report(instance, tree_components(tg, deleted), "single-gh", 0, clock.elapsed_ms());
  report.metrics["tree_weight"] = tg.edge(lightest).weight;
  return report;
}

}  // namespace fusion
