#include "fusion/heuristics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusion/disjoint_sets.hpp"
#include "fusion/errors.hpp"
#include "fusion/rng.hpp"
#include "forbidden_tracker.hpp"

namespace fusion {

SolveReport best_in_greedy(const FusionInstance& instance, std::uint64_t seed) {
  Stopwatch clock;
  require_valid(instance);
  const WeightedGraph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  Rng rng = Rng::stream(seed, "greedy-subgraph");

  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  rng.shuffle(std::span(order));
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).weight > g.edge(b).weight; });

  std::vector<std::uint32_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0u);
  detail::ForbiddenTracker tracker(n, identity, instance.forbidden());
  DisjointSets sets(n);
  std::vector<EdgeId> kept;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    const std::size_t a = sets.find(e.u);
    const std::size_t b = sets.find(e.v);
    if (a == b) {
      kept.push_back(id);
      continue;
    }
    if (!tracker.can_merge(a, b)) continue;
    sets.unite(a, b);
    const std::size_t root = sets.find(a);
    tracker.merge(root, root == a ? b : a);
    kept.push_back(id);
  }
  std::sort(kept.begin(), kept.end());
  return make_report(instance, Coloring(component_labels(g, kept)), "greedy-subgraph", seed,
                     clock.elapsed_ms());
}

OrderPolicy parse_order_policy(std::string_view name) {
  if (name == "given") return OrderPolicy::given;
  if (name == "random") return OrderPolicy::random;
  if (name == "incident-weight") return OrderPolicy::incident_weight;
  if (name == "forbidden-degree") return OrderPolicy::forbidden_degree;
  throw InvalidArgument("unknown order policy '" + std::string(name) + "'");
}

std::string_view to_string(OrderPolicy policy) {
  switch (policy) {
    case OrderPolicy::given: return "given";
    case OrderPolicy::random: return "random";
    case OrderPolicy::incident_weight: return "incident-weight";
    case OrderPolicy::forbidden_degree: return "forbidden-degree";
  }
  return "given";
}

SolveReport greedy_coloring(const FusionInstance& instance, OrderPolicy policy, std::uint64_t seed) {
  Stopwatch clock;
  require_valid(instance);
  const WeightedGraph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  Rng rng = Rng::stream(seed, "greedy-color");

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (policy == OrderPolicy::random) {
    rng.shuffle(std::span(order));
  } else if (policy == OrderPolicy::incident_weight) {
    std::vector<double> weight(n, 0.0);
    for (const Edge& e : g.edges()) {
      weight[e.u] += e.weight;
      weight[e.v] += e.weight;
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return weight[a] > weight[b]; });
  } else if (policy == OrderPolicy::forbidden_degree) {
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return instance.sets_containing(a).size() > instance.sets_containing(b).size();
    });
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  constexpr std::uint32_t kUncolored = UINT32_MAX;
  std::vector<std::uint32_t> color(n, kUncolored);
  std::uint32_t used = 0;
  std::vector<double> affinity;
  std::vector<char> admissible;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    admissible.assign(used, 1);
    for (std::uint32_t s : instance.sets_containing(v)) {
      const VertexSet& f = instance.forbidden()[s];
      // Only sets whose last vertex in the order is v are decided now.
      const bool closes = std::all_of(f.begin(), f.end(), [&](Vertex x) { return position[x] <= i; });
      if (!closes) continue;
      std::uint32_t shared = kUncolored;
      bool mono = true;
      for (Vertex x : f) {
        if (x == v) continue;
        if (shared == kUncolored) shared = color[x];
        else if (color[x] != shared) mono = false;
      }
      if (mono && shared != kUncolored) admissible[shared] = 0;
    }
    affinity.assign(used, 0.0);
    for (const Incidence& inc : g.incident(v)) {
      if (color[inc.neighbor] != kUncolored) affinity[color[inc.neighbor]] += g.edge(inc.edge).weight;
    }
    std::vector<std::uint32_t> best;
    double best_weight = -1.0;
    for (std::uint32_t c = 0; c < used; ++c) {
      if (!admissible[c]) continue;
      if (affinity[c] > best_weight) {
        best_weight = affinity[c];
        best.assign(1, c);
      } else if (affinity[c] == best_weight) {
        best.push_back(c);
      }
    }
    if (best.empty()) {
      color[v] = used++;
    } else {
      color[v] = best.size() == 1 ? best.front() : best[rng.below(best.size())];
    }
  }
  auto report = make_report(instance, Coloring(std::move(color)), "greedy-color", seed, clock.elapsed_ms());
  report.notes.push_back("order=" + std::string(to_string(policy)));
  return report;
}

SolveReport greedy_matching(const FusionInstance& instance, std::uint64_t seed) {
  Stopwatch clock;
  require_valid(instance);
  const WeightedGraph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  Rng rng = Rng::stream(seed, "greedy-match");

  std::vector<std::uint32_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0u);
  detail::ForbiddenTracker tracker(n, identity, instance.forbidden());
  std::vector<std::uint32_t> block(identity);
  // Weight between live blocks, keyed by (lower id, higher id); ordered for determinism.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> between;
  for (const Edge& e : g.edges()) between[{e.u, e.v}] += e.weight;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> ties;
  while (true) {
    double best = 0.0;
    ties.clear();
    for (const auto& [pair, w] : between) {
      if (w < best || !(w > 0.0)) continue;
      if (!tracker.can_merge(pair.first, pair.second)) continue;
      if (w > best) {
        best = w;
        ties.clear();
      }
      ties.push_back(pair);
    }
    if (ties.empty()) break;
    const auto [keep, gone] = ties.size() == 1 ? ties.front() : ties[rng.below(ties.size())];
    tracker.merge(keep, gone);
    for (auto& b : block) {
      if (b == gone) b = keep;
    }
    // Re-key every pair touching the absorbed block.
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> next;
    for (const auto& [pair, w] : between) {
      std::uint32_t a = pair.first == gone ? keep : pair.first;
      std::uint32_t b = pair.second == gone ? keep : pair.second;
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      next[{a, b}] += w;
    }
    between = std::move(next);
  }
  return make_report(instance, Coloring(std::move(block)), "greedy-match", seed, clock.elapsed_ms());
}

}  // namespace fusion
