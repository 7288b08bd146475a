#include "fusion/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fusion/disjoint_sets.hpp"
#include "fusion/errors.hpp"

namespace fusion {

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : WeightedGraph(index_labels(vertex_count), edges) {}

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  label_index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!label_index_.emplace(labels_[i], static_cast<Vertex>(i)).second) {
      throw InvalidArgument("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  build(edges);
}

void WeightedGraph::build(std::span<const Edge> input) {
  const std::size_t n = labels_.size();
  std::vector<Edge> sorted;
  sorted.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u >= n || e.v >= n) throw InvalidArgument("edge endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex '" + labels_[e.u] + "'");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("edge weight must be positive and finite");
    }
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : sorted) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
    total_weight_ += e.weight;
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
}

std::span<const Incidence> WeightedGraph::incident(Vertex v) const {
  return std::span<const Incidence>(adjacency_).subspan(offsets_.at(v), offsets_.at(v + 1) - offsets_[v]);
}

std::optional<Vertex> WeightedGraph::find_vertex(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  const Vertex u = std::min(a, b);
  const Vertex v = std::max(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0.0},
                                   [](const Edge& x, const Edge& y) {
                                     return x.u != y.u ? x.u < y.u : x.v < y.v;
                                   });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

bool WeightedGraph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

bool WeightedGraph::is_tree() const {
  return vertex_count() >= 1 && edge_count() + 1 == vertex_count() && is_connected();
}

std::vector<std::uint32_t> component_labels(const WeightedGraph& graph,
                                            std::span<const EdgeId> kept_edges) {
  const std::size_t n = graph.vertex_count();
  DisjointSets sets(n);
  for (EdgeId id : kept_edges) {
    if (id >= graph.edge_count()) throw InvalidArgument("unknown edge id " + std::to_string(id));
    const Edge& e = graph.edge(id);
    sets.unite(e.u, e.v);
  }
  std::vector<std::uint32_t> labels(n);
  std::vector<std::int64_t> root_label(n, -1);
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (root_label[root] < 0) root_label[root] = next++;
    labels[v] = static_cast<std::uint32_t>(root_label[root]);
  }
  return labels;
}

Partition connected_components(const WeightedGraph& graph, std::span<const EdgeId> kept_edges) {
  const auto labels = component_labels(graph, kept_edges);
  std::uint32_t count = 0;
  for (auto l : labels) count = std::max(count, l + 1);
  Partition blocks(count);
  for (Vertex v = 0; v < labels.size(); ++v) blocks[labels[v]].push_back(v);
  return blocks;
}

Partition canonical_partition(Partition blocks) {
  std::erase_if(blocks, [](const Block& b) { return b.empty(); });
  for (Block& b : blocks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace fusion
