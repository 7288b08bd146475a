#include "fusion/multiway.hpp"

#include <algorithm>
#include <numeric>

#include "fusion/disjoint_sets.hpp"
#include "fusion/errors.hpp"

namespace fusion {

namespace {

VertexSet checked_terminals(const WeightedGraph& graph, std::span<const Vertex> terminals) {
  VertexSet t(terminals.begin(), terminals.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.size() < 2 || t.size() >= graph.vertex_count()) {
    throw InvalidArgument("multiway: need 2 <= |T| < |V|");
  }
  for (Vertex v : t) {
    if (v >= graph.vertex_count()) throw InvalidArgument("multiway: terminal out of range");
  }
  for (const Edge& e : graph.edges()) {
    if (std::binary_search(t.begin(), t.end(), e.u) && std::binary_search(t.begin(), t.end(), e.v)) {
      throw InvalidArgument("multiway: edge " + graph.label(e.u) + "-" + graph.label(e.v) +
                            " joins two terminals");
    }
  }
  return t;
}

}  // namespace

MultiwayResult multiway_greedy_forest(const WeightedGraph& graph, std::span<const Vertex> terminals) {
  MultiwayResult result;
  result.forest.terminals = checked_terminals(graph, terminals);
  if (!graph.is_connected()) throw InvalidArgument("multiway: graph is disconnected");

  std::vector<EdgeId> order(graph.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  // EdgeIds are already in canonical (min id, max id) order.
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return graph.edge(a).weight > graph.edge(b).weight; });

  DisjointSets sets(graph.vertex_count());
  for (Vertex t : result.forest.terminals) sets.mark(t);
  for (EdgeId id : order) {
    const Edge& e = graph.edge(id);
    if (sets.same(e.u, e.v)) continue;
    if (sets.marked(e.u) + sets.marked(e.v) > 1) continue;
    sets.unite(e.u, e.v);
    result.forest.kept_edges.push_back(id);
    result.forest_weight += e.weight;
  }
  std::sort(result.forest.kept_edges.begin(), result.forest.kept_edges.end());
  result.partition = connected_components(graph, result.forest.kept_edges);
  const auto labels = component_labels(graph, result.forest.kept_edges);
  result.cut_weight = cut_weight_of(graph, labels);
  return result;
}

bool is_terminal_forest(const WeightedGraph& graph, std::span<const EdgeId> kept_edges,
                        std::span<const Vertex> terminals) {
  DisjointSets sets(graph.vertex_count());
  for (Vertex t : terminals) sets.mark(t);
  for (EdgeId id : kept_edges) {
    if (id >= graph.edge_count()) return false;
    const Edge& e = graph.edge(id);
    if (!sets.unite(e.u, e.v)) return false;
    if (sets.marked(e.u) > 1) return false;
  }
  return true;
}

SolveReport solve_multiway(const WeightedGraph& graph, std::span<const Vertex> terminals) {
  Stopwatch clock;
  const MultiwayResult mw = multiway_greedy_forest(graph, terminals);
  const std::vector<std::vector<Vertex>> groups{mw.forest.terminals};
  const FusionInstance instance = mmc_to_fusion(graph, groups);
  auto report = make_report(instance, Coloring(component_labels(graph, mw.forest.kept_edges)), "multiway", 0,
                            clock.elapsed_ms());
  report.metrics["forest_weight"] = mw.forest_weight;
  report.notes.push_back(
      "maximum terminal-forest weight is not the minimum multiway cut objective; cut_weight is that of the "
      "forest's components");
  return report;
}

}  // namespace fusion
