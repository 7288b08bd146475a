#include "fusion/instance.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "fusion/errors.hpp"

namespace fusion {

FusionInstance::FusionInstance(WeightedGraph graph, std::vector<VertexSet> forbidden)
    : graph_(std::move(graph)), forbidden_(std::move(forbidden)) {
  for (VertexSet& f : forbidden_) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(forbidden_.begin(), forbidden_.end());
  forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
  membership_.assign(graph_.vertex_count(), {});
  for (std::uint32_t i = 0; i < forbidden_.size(); ++i) {
    for (Vertex v : forbidden_[i]) {
      if (v < membership_.size()) membership_[v].push_back(i);
    }
  }
}

std::span<const std::uint32_t> FusionInstance::sets_containing(Vertex v) const {
  return membership_.at(v);
}

ValidationReport validate(const FusionInstance& instance) {
  ValidationReport report;
  const WeightedGraph& g = instance.graph();
  const auto sets = instance.forbidden();
  auto describe = [&](const VertexSet& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ",";
      s += f[i] < g.vertex_count() ? g.label(f[i]) : "#" + std::to_string(f[i]);
    }
    return s + "}";
  };
  for (const VertexSet& f : sets) {
    bool in_range = true;
    if (f.size() < 2) report.violations.push_back("forbidden set " + describe(f) + " has size < 2");
    for (Vertex v : f) {
      if (v >= g.vertex_count()) {
        report.violations.push_back("forbidden set " + describe(f) + " names an unknown vertex");
        in_range = false;
        break;
      }
    }
    if (f.size() == 2 && in_range && g.find_edge(f[0], f[1])) {
      report.violations.push_back("forbidden pair " + describe(f) + " is an edge of the graph");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || sets[i].size() > sets[j].size()) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        report.violations.push_back("antichain broken: " + describe(sets[i]) + " is contained in " +
                                    describe(sets[j]));
      }
    }
  }
  if (!g.is_connected()) report.warnings.push_back("graph is disconnected");
  return report;
}

void require_valid(const FusionInstance& instance) {
  const auto report = validate(instance);
  if (report.ok()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : report.violations) msg += " " + v + ";";
  throw InvalidArgument(msg);
}

Coloring::Coloring(std::vector<std::uint32_t> colors) : colors_(std::move(colors)) {
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  for (auto& c : colors_) {
    const auto [it, inserted] = remap.emplace(c, static_cast<std::uint32_t>(remap.size()));
    c = it->second;
  }
  count_ = remap.size();
}

Partition Coloring::classes() const {
  Partition blocks(count_);
  for (Vertex v = 0; v < colors_.size(); ++v) blocks[colors_[v]].push_back(v);
  return blocks;
}

namespace {

void check_coloring(const FusionInstance& instance, const Coloring& c) {
  if (c.size() != instance.graph().vertex_count()) {
    throw InvalidArgument("coloring does not cover exactly the instance vertices");
  }
}

void check_subgraph(const FusionInstance& instance, const SubgraphSolution& s) {
  for (EdgeId id : s.kept_edges) {
    if (id >= instance.graph().edge_count()) throw InvalidArgument("subgraph names an unknown edge");
  }
}

std::vector<std::uint32_t> block_labels(const FusionInstance& instance, const MatchingSolution& m) {
  const std::size_t n = instance.graph().vertex_count();
  std::vector<std::uint32_t> labels(n, UINT32_MAX);
  for (std::uint32_t b = 0; b < m.blocks.size(); ++b) {
    for (Vertex v : m.blocks[b]) {
      if (v >= n) throw InvalidArgument("matching names an unknown vertex");
      if (labels[v] != UINT32_MAX) throw InvalidArgument("matching blocks overlap");
      labels[v] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), UINT32_MAX) != labels.end()) {
    throw InvalidArgument("matching blocks do not cover every vertex");
  }
  return labels;
}

}  // namespace

std::vector<std::uint32_t> groups_of(const FusionInstance& instance, const Solution& solution) {
  return std::visit(
      [&](const auto& s) -> std::vector<std::uint32_t> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coloring>) {
          check_coloring(instance, s);
          return {s.colors().begin(), s.colors().end()};
        } else if constexpr (std::is_same_v<T, SubgraphSolution>) {
          check_subgraph(instance, s);
          return component_labels(instance.graph(), s.kept_edges);
        } else {
          return block_labels(instance, s);
        }
      },
      solution);
}

double cut_weight_of(const WeightedGraph& graph, std::span<const std::uint32_t> groups) {
  double cut = 0.0;
  for (const Edge& e : graph.edges()) {
    if (groups[e.u] != groups[e.v]) cut += e.weight;
  }
  return cut;
}

bool groups_feasible(const FusionInstance& instance, std::span<const std::uint32_t> groups) {
  for (const VertexSet& f : instance.forbidden()) {
    const bool mono = std::all_of(f.begin(), f.end(), [&](Vertex v) { return groups[v] == groups[f.front()]; });
    if (mono) return false;
  }
  return true;
}

Objective evaluate(const FusionInstance& instance, const Solution& solution) {
  const auto groups = groups_of(instance, solution);
  Objective obj;
  obj.cut_weight = cut_weight_of(instance.graph(), groups);
  obj.kept_weight = instance.graph().total_weight() - obj.cut_weight;
  return obj;
}

bool is_feasible(const FusionInstance& instance, const Solution& solution) {
  return groups_feasible(instance, groups_of(instance, solution));
}

Solution convert(const FusionInstance& instance, const Solution& solution, SolutionForm target) {
  const auto groups = groups_of(instance, solution);
  if (!groups_feasible(instance, groups)) throw InvalidArgument("convert: solution is infeasible");
  const WeightedGraph& g = instance.graph();
  switch (target) {
    case SolutionForm::coloring:
      if (std::holds_alternative<Coloring>(solution)) return solution;
      return Coloring(groups);
    case SolutionForm::subgraph: {
      if (std::holds_alternative<SubgraphSolution>(solution)) return solution;
      SubgraphSolution out;
      for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (groups[g.edge(id).u] == groups[g.edge(id).v]) out.kept_edges.push_back(id);
      }
      return out;
    }
    case SolutionForm::matching: {
      if (std::holds_alternative<MatchingSolution>(solution)) return solution;
      // A subgraph's blocks are its components; a coloring goes through its
      // induced subgraph, so disconnected color classes become several blocks.
      std::vector<std::uint32_t> comp;
      if (const auto* sub = std::get_if<SubgraphSolution>(&solution)) {
        comp = component_labels(g, sub->kept_edges);
      } else {
        const auto sub2 = std::get<SubgraphSolution>(convert(instance, solution, SolutionForm::subgraph));
        comp = component_labels(g, sub2.kept_edges);
      }
      return MatchingSolution{Coloring(comp).classes()};
    }
  }
  throw InvalidArgument("convert: unknown target form");
}

FusionInstance mmc_to_fusion(const WeightedGraph& graph,
                             std::span<const std::vector<Vertex>> terminal_groups) {
  std::set<VertexSet> pairs;
  for (const auto& group : terminal_groups) {
    std::vector<Vertex> s(group.begin(), group.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2) throw InvalidArgument("terminal group needs at least 2 vertices");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= graph.vertex_count()) throw InvalidArgument("terminal out of range");
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (graph.find_edge(s[i], s[j])) {
          throw InvalidArgument("terminals " + graph.label(s[i]) + " and " + graph.label(s[j]) +
                                " are joined by an edge");
        }
        pairs.insert({s[i], s[j]});
      }
    }
  }
  return FusionInstance(graph, std::vector<VertexSet>(pairs.begin(), pairs.end()));
}

}  // namespace fusion
