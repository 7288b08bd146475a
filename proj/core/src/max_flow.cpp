#include "fusion/max_flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "fusion/errors.hpp"

namespace fusion {

MinCutSolver::MinCutSolver(const WeightedGraph& graph) : graph_(&graph) {
  const std::size_t n = graph.vertex_count();
  arcs_.assign(n + 2, {});
  double max_weight = 0.0;
  for (const Edge& e : graph.edges()) {
    add_arc_pair(e.u, e.v, e.weight, e.weight, false);
    max_weight = std::max(max_weight, e.weight);
  }
  base_arcs_ = arcs_;
  epsilon_ = 1e-12 * std::max(1.0, max_weight);
  level_.resize(n + 2);
  cursor_.resize(n + 2);
}

void MinCutSolver::add_arc_pair(std::uint32_t a, std::uint32_t b, double cap_ab, double cap_ba,
                                bool unbounded) {
  const auto ia = static_cast<std::uint32_t>(arcs_[a].size());
  const auto ib = static_cast<std::uint32_t>(arcs_[b].size());
  arcs_[a].push_back({b, ib, cap_ab, unbounded});
  arcs_[b].push_back({a, ia, cap_ba, false});
}

double MinCutSolver::residual(const Arc& arc) const {
  return arc.unbounded ? std::numeric_limits<double>::infinity() : arc.residual;
}

bool MinCutSolver::build_levels(std::uint32_t s, std::uint32_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<std::uint32_t> queue{s};
  level_[s] = 0;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (const Arc& arc : arcs_[v]) {
      if (level_[arc.to] < 0 && residual(arc) > epsilon_) {
        level_[arc.to] = level_[v] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

double MinCutSolver::blocking_flow(std::uint32_t s, std::uint32_t t) {
  std::fill(cursor_.begin(), cursor_.end(), 0);
  double total = 0.0;
  // path[i] is the vertex that the i-th arc leaves; the arc is arcs_[v][cursor_[v]].
  std::vector<std::uint32_t> path;
  std::uint32_t v = s;
  while (true) {
    if (v == t) {
      double bottleneck = std::numeric_limits<double>::infinity();
      for (std::uint32_t u : path) bottleneck = std::min(bottleneck, residual(arcs_[u][cursor_[u]]));
      for (std::uint32_t u : path) {
        Arc& arc = arcs_[u][cursor_[u]];
        if (!arc.unbounded) arc.residual -= bottleneck;
        Arc& back = arcs_[arc.to][arc.rev];
        if (!back.unbounded) back.residual += bottleneck;
      }
      total += bottleneck;
      path.clear();
      v = s;
      continue;
    }
    bool advanced = false;
    auto& out = arcs_[v];
    while (cursor_[v] < out.size()) {
      const Arc& arc = out[cursor_[v]];
      if (residual(arc) > epsilon_ && level_[arc.to] == level_[v] + 1) {
        path.push_back(v);
        v = arc.to;
        advanced = true;
        break;
      }
      ++cursor_[v];
    }
    if (advanced) continue;
    if (v == s) break;
    level_[v] = -1;
    v = path.back();
    path.pop_back();
    ++cursor_[v];
  }
  return total;
}

CutResult MinCutSolver::solve(std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  const std::size_t n = graph_->vertex_count();
  if (sources.empty() || sinks.empty()) throw InvalidArgument("min cut: empty terminal set");
  std::vector<char> role(n, 0);
  for (Vertex v : sources) {
    if (v >= n) throw InvalidArgument("min cut: source out of range");
    role[v] = 1;
  }
  for (Vertex v : sinks) {
    if (v >= n) throw InvalidArgument("min cut: sink out of range");
    if (role[v] == 1) throw InvalidArgument("min cut: sources and sinks overlap");
    role[v] = 2;
  }
  ++calls_;

  const auto s = static_cast<std::uint32_t>(n);
  const auto t = static_cast<std::uint32_t>(n + 1);
  arcs_ = base_arcs_;
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == 1) add_arc_pair(s, v, 0.0, 0.0, true);
    if (role[v] == 2) add_arc_pair(v, t, 0.0, 0.0, true);
  }
  while (build_levels(s, t)) blocking_flow(s, t);

  // build_levels left the residual reachability set from s in level_.
  CutResult result;
  for (Vertex v = 0; v < n; ++v) {
    if (level_[v] >= 0) result.source_side.push_back(v);
  }
  for (EdgeId id = 0; id < graph_->edge_count(); ++id) {
    const Edge& e = graph_->edge(id);
    if ((level_[e.u] >= 0) != (level_[e.v] >= 0)) {
      result.cut_edges.push_back(id);
      result.value += e.weight;
    }
  }
  return result;
}

CutResult min_st_cut(const WeightedGraph& graph, std::span<const Vertex> sources,
                     std::span<const Vertex> sinks) {
  if (!graph.is_connected()) throw InvalidArgument("min cut: graph is disconnected");
  MinCutSolver solver(graph);
  return solver.solve(sources, sinks);
}

}  // namespace fusion
