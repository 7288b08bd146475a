#include "fusion/gomory_hu.hpp"

#include <algorithm>
#include <limits>

#include "fusion/errors.hpp"
#include "fusion/max_flow.hpp"

namespace fusion {

WeightedGraph GomoryHuTree::as_graph(std::span<const std::string> labels) const {
  return WeightedGraph(std::vector<std::string>(labels.begin(), labels.end()), edges);
}

WeightedGraph GomoryHuTree::as_graph() const { return WeightedGraph(vertex_count, edges); }

double GomoryHuTree::path_min(Vertex u, Vertex v) const {
  if (u >= vertex_count || v >= vertex_count || u == v) {
    throw InvalidArgument("path_min: need two distinct vertices of the tree");
  }
  std::vector<std::vector<std::pair<Vertex, double>>> adj(vertex_count);
  for (const Edge& e : edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  std::vector<double> best(vertex_count, -1.0);
  std::vector<Vertex> stack{u};
  best[u] = std::numeric_limits<double>::infinity();
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (auto [y, w] : adj[x]) {
      if (best[y] < 0.0) {
        best[y] = std::min(best[x], w);
        stack.push_back(y);
      }
    }
  }
  return best[v];
}

GomoryHuTree gomory_hu(const WeightedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) throw InvalidArgument("gomory_hu: need at least 2 vertices");
  if (!graph.is_connected()) throw InvalidArgument("gomory_hu: graph is disconnected");

  std::vector<Vertex> parent(n, 0);
  std::vector<double> flow(n, 0.0);
  MinCutSolver solver(graph);
  std::vector<char> on_source(n);
  for (Vertex s = 1; s < n; ++s) {
    const Vertex t = parent[s];
    const Vertex src[] = {s};
    const Vertex snk[] = {t};
    const CutResult cut = solver.solve(src, snk);
    std::fill(on_source.begin(), on_source.end(), 0);
    for (Vertex v : cut.source_side) on_source[v] = 1;
    flow[s] = cut.value;
    for (Vertex i = 0; i < n; ++i) {
      if (i != s && on_source[i] && parent[i] == t) parent[i] = s;
    }
    if (on_source[parent[t]]) {
      parent[s] = parent[t];
      parent[t] = s;
      flow[s] = flow[t];
      flow[t] = cut.value;
    }
  }

  GomoryHuTree tree;
  tree.vertex_count = n;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == v) continue;  // the root
    tree.edges.push_back({std::min(v, parent[v]), std::max(v, parent[v]), flow[v]});
  }
  std::sort(tree.edges.begin(), tree.edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return tree;
}

namespace {

std::vector<char> terminal_mask(const WeightedGraph& tree, std::span<const Vertex> terminals) {
  if (!tree.is_tree()) throw InvalidArgument("bounded_subtree: input is not a tree");
  std::vector<char> mask(tree.vertex_count(), 0);
  std::size_t distinct = 0;
  for (Vertex v : terminals) {
    if (v >= tree.vertex_count()) throw InvalidArgument("bounded_subtree: vertex out of range");
    if (!mask[v]) ++distinct;
    mask[v] = 1;
  }
  if (distinct < 2) throw InvalidArgument("bounded_subtree: need at least 2 terminals");
  return mask;
}

// Peels vertices of degree < 2 that are not protected, until none is left.
// Returns the surviving edge mask.
std::vector<char> peel(std::size_t vertex_count, std::span<const Edge> edges,
                       const std::vector<char>& protect) {
  std::vector<std::vector<EdgeId>> inc(vertex_count);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    inc[edges[id].u].push_back(id);
    inc[edges[id].v].push_back(id);
  }
  std::vector<std::size_t> degree(vertex_count);
  std::vector<char> alive_edge(edges.size(), 1);
  std::vector<char> removed(vertex_count, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < vertex_count; ++v) {
    degree[v] = inc[v].size();
    if (!protect[v] && degree[v] < 2) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (EdgeId id : inc[v]) {
      if (!alive_edge[id]) continue;
      alive_edge[id] = 0;
      const Vertex w = edges[id].other(v);
      if (--degree[w] < 2 && !protect[w] && !removed[w]) queue.push_back(w);
    }
  }
  return alive_edge;
}

}  // namespace

std::vector<EdgeId> bounded_subtree(const WeightedGraph& tree, std::span<const Vertex> terminals) {
  const auto mask = terminal_mask(tree, terminals);
  const auto alive = peel(tree.vertex_count(), tree.edges(), mask);
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < alive.size(); ++id) {
    if (alive[id]) out.push_back(id);
  }
  return out;
}

std::vector<EdgeId> bounded_subtree_two_core(const WeightedGraph& tree,
                                             std::span<const Vertex> terminals) {
  const auto mask = terminal_mask(tree, terminals);
  const std::size_t n = tree.vertex_count();
  std::vector<Edge> augmented(tree.edges().begin(), tree.edges().end());
  const auto hub = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    if (mask[v]) augmented.push_back({v, hub, 1.0});
  }
  const std::vector<char> nobody(n + 1, 0);
  const auto alive = peel(n + 1, augmented, nobody);
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < tree.edge_count(); ++id) {
    if (alive[id]) out.push_back(id);
  }
  return out;
}

}  // namespace fusion
