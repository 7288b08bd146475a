#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fusion {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected weighted edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

using Block = std::vector<Vertex>;
// Blocks are sorted internally and ordered by their smallest vertex.
using Partition = std::vector<Block>;

// Immutable simple graph with positive edge weights. Vertices are the indices
// 0..n-1 in declaration order; each carries an opaque string label. Edges are
// kept in canonical (u, v) order, so EdgeIds are stable for a given input.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Unlabelled vertices get their decimal index as label. Parallel edges are
  // merged by summing weights; self-loops and non-positive or non-finite
  // weights are rejected with InvalidArgument.
  WeightedGraph(std::size_t vertex_count, std::span<const Edge> edges);
  WeightedGraph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Vertex> find_vertex(std::string_view label) const;
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  double total_weight() const { return total_weight_; }
  bool is_connected() const;
  // Connected and |E| = |V| - 1.
  bool is_tree() const;

 private:
  void build(std::span<const Edge> edges);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  double total_weight_ = 0.0;
};

// Components of (V, kept_edges). Unknown edge ids raise InvalidArgument.
Partition connected_components(const WeightedGraph& graph, std::span<const EdgeId> kept_edges);

// Component index per vertex, numbered in order of each component's smallest vertex.
std::vector<std::uint32_t> component_labels(const WeightedGraph& graph,
                                            std::span<const EdgeId> kept_edges);

// Sorts each block and orders blocks by smallest member; drops empty blocks.
Partition canonical_partition(Partition blocks);

}  // namespace fusion
