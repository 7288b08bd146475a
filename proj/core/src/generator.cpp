#include "fusion/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "fusion/errors.hpp"
#include "fusion/rng.hpp"

namespace fusion {

LogBase parse_log_base(std::string_view name) {
  if (name == "e" || name == "natural" || name == "ln") return LogBase::natural;
  if (name == "2") return LogBase::two;
  if (name == "10") return LogBase::ten;
  throw InvalidArgument("unknown log base '" + std::string(name) + "'");
}

std::size_t forbidden_set_count(std::size_t nodes, LogBase base) {
  if (nodes < 2) throw InvalidArgument("forbidden_set_count: need at least 2 nodes");
  const double x = static_cast<double>(nodes);
  double value = std::log(x);
  if (base == LogBase::two) value = std::log2(x);
  if (base == LogBase::ten) value = std::log10(x);
  return static_cast<std::size_t>(std::ceil(value));
}

std::size_t bad_vertex_count(std::size_t b) { return (3 * b + 3) / 4; }

namespace {

struct PairHash {
  std::size_t operator()(std::uint64_t key) const { return std::hash<std::uint64_t>{}(key); }
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// One pairing attempt; false if some stub could not be matched.
bool pair_stubs(std::vector<std::uint32_t> stubs, Rng& rng, std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
  constexpr int kPartnerTries = 64;
  std::unordered_set<std::uint64_t, PairHash> seen;
  out.clear();
  while (!stubs.empty()) {
    const std::uint32_t a = stubs.back();
    stubs.pop_back();
    bool matched = false;
    for (int attempt = 0; attempt < kPartnerTries && !stubs.empty(); ++attempt) {
      const auto j = static_cast<std::size_t>(rng.below(stubs.size()));
      const std::uint32_t b = stubs[j];
      if (b == a || seen.count(pair_key(a, b))) continue;
      seen.insert(pair_key(a, b));
      out.emplace_back(a, b);
      stubs[j] = stubs.back();
      stubs.pop_back();
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

FusionInstance random_instance(const GenSpec& spec) {
  const std::size_t n = spec.nodes;
  const std::size_t m = spec.edges;
  if (n < 4) throw InvalidArgument("generator: need at least 4 nodes");
  if (m + 1 < n) throw InvalidArgument("generator: need edges >= nodes - 1");
  if (spec.weight_dist != "uniform01") {
    throw InvalidArgument("generator: unsupported weight distribution '" + spec.weight_dist + "'");
  }
  if (m > n * (n - 1) / 2) throw InvalidArgument("generator: more edges than a simple graph can hold");

  Rng rng = Rng::stream(spec.seed, "generator");
  std::vector<std::uint32_t> degree(n, 1);
  for (std::size_t ball = 0; ball < 2 * m - n; ++ball) ++degree[rng.below(n)];
  std::vector<std::uint32_t> stubs;
  stubs.reserve(2 * m);
  for (std::uint32_t v = 0; v < n; ++v) stubs.insert(stubs.end(), degree[v], v);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  bool ok = false;
  for (std::size_t restart = 0; restart < kPairingRestarts && !ok; ++restart) {
    rng.shuffle(std::span(stubs));
    ok = pair_stubs(stubs, rng, pairs);
  }
  if (!ok) {
    throw GenerationFailure("generator: configuration-model pairing failed after " +
                            std::to_string(kPairingRestarts) + " restarts (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ")");
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return pair_key(x.first, x.second) < pair_key(y.first, y.second);
  });

  // Largest component; ties go to the one holding the smallest vertex.
  std::vector<Edge> all_edges;
  for (auto [a, b] : pairs) all_edges.push_back({a, b, 1.0});
  const WeightedGraph skeleton(n, all_edges);
  const Partition comps = connected_components(skeleton, [&] {
    std::vector<EdgeId> ids(skeleton.edge_count());
    for (EdgeId i = 0; i < ids.size(); ++i) ids[i] = i;
    return ids;
  }());
  const Block* giant = &comps.front();
  for (const Block& c : comps) {
    if (c.size() > giant->size()) giant = &c;
  }
  std::vector<std::int64_t> index(n, -1);
  std::vector<std::string> labels;
  for (Vertex v : *giant) {
    index[v] = static_cast<std::int64_t>(labels.size());
    labels.push_back("v" + std::to_string(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : skeleton.edges()) {
    if (index[e.u] < 0) continue;
    edges.push_back({static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]), rng.uniform_open01()});
  }
  const std::size_t size = labels.size();
  WeightedGraph graph(std::move(labels), edges);

  const std::size_t b = forbidden_set_count(n, spec.log_base);
  const std::size_t a = bad_vertex_count(b);
  if (size < a + 2) {
    throw GenerationFailure("generator: giant component has " + std::to_string(size) +
                            " vertices, too few for " + std::to_string(a) + " bad and 2 good vertices");
  }
  std::vector<Vertex> order(size);
  for (Vertex v = 0; v < size; ++v) order[v] = v;
  // Partial Fisher-Yates: the first a entries are the bad vertices.
  for (std::size_t i = 0; i < a; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(size - i));
    std::swap(order[i], order[j]);
  }
  const std::vector<Vertex> bad(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(a));
  std::vector<Vertex> good(order.begin() + static_cast<std::ptrdiff_t>(a), order.end());
  std::sort(good.begin(), good.end());

  const std::size_t pair_count = good.size() * (good.size() - 1) / 2;
  if (b > a * pair_count) throw GenerationFailure("generator: not enough distinct forbidden sets available");
  std::set<VertexSet> chosen;
  std::vector<VertexSet> forbidden;
  while (forbidden.size() < b) {
    const Vertex x = bad[rng.below(a)];
    const auto i = rng.below(good.size());
    auto j = rng.below(good.size() - 1);
    if (j >= i) ++j;
    VertexSet f{x, good[i], good[j]};
    std::sort(f.begin(), f.end());
    if (chosen.insert(f).second) forbidden.push_back(std::move(f));
  }
  return FusionInstance(std::move(graph), std::move(forbidden));
}

namespace {

struct NamedEdge {
  const char* u;
  const char* v;
  double w;
};

FusionInstance build(std::vector<std::string> labels, std::initializer_list<NamedEdge> named,
                     std::initializer_list<std::initializer_list<const char*>> sets) {
  auto id = [&](const char* name) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    return static_cast<Vertex>(it - labels.begin());
  };
  std::vector<Edge> edges;
  for (const NamedEdge& e : named) edges.push_back({id(e.u), id(e.v), e.w});
  std::vector<VertexSet> forbidden;
  for (const auto& s : sets) {
    VertexSet f;
    for (const char* name : s) f.push_back(id(name));
    forbidden.push_back(std::move(f));
  }
  WeightedGraph graph(std::move(labels), edges);
  return FusionInstance(std::move(graph), std::move(forbidden));
}

}  // namespace

FusionInstance fixture_path(double b) {
  return build({"v1", "v2", "v3", "v4"}, {{"v2", "v3", 1.0}, {"v3", "v4", b}, {"v4", "v1", 1.0}},
               {{"v1", "v2"}, {"v1", "v3", "v4"}, {"v2", "v3", "v4"}});
}

std::vector<std::string> fixture_names() {
  return {"FIX-PATH", "FIX-GH-TREE", "FIX-2FS-TREE", "FIX-SINGLE", "FIX-MERGE", "FIX-GREEDY-TRAP"};
}

bool is_fixture_name(std::string_view name) {
  const auto base = name.substr(0, name.find(':'));
  const auto names = fixture_names();
  return std::find(names.begin(), names.end(), base) != names.end();
}

FusionInstance fixture(std::string_view name) {
  if (name == "FIX-PATH") return fixture_path();
  if (name.starts_with("FIX-PATH:")) {
    const std::string arg(name.substr(9));
    std::size_t used = 0;
    double b = 0.0;
    try {
      b = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || !(b > 0.0)) throw InvalidArgument("FIX-PATH: bad weight '" + arg + "'");
    return fixture_path(b);
  }
  if (name == "FIX-GH-TREE") {
    return build({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v11"},
                 {{"v6", "v2", 1.56},
                  {"v2", "v4", 2.63},
                  {"v4", "v1", 2.47},
                  {"v1", "v11", 0.37},
                  {"v4", "v3", 3.06},
                  {"v3", "v9", 1.33},
                  {"v4", "v8", 1.29},
                  {"v8", "v7", 1.31},
                  {"v4", "v5", 2.05},
                  {"v1", "v10", 0.73}},
                 {{"v1", "v2", "v3"}, {"v5", "v8"}});
  }
  if (name == "FIX-2FS-TREE") {
    return build({"s", "t", "s'", "t'"}, {{"s", "t", 2.0}, {"t", "s'", 6.0}, {"s'", "t'", 5.0}},
                 {{"s", "s'"}, {"t", "t'"}});
  }
  if (name == "FIX-SINGLE") {
    return build({"a", "b", "c"}, {{"a", "b", 1.0}, {"a", "c", 1.0}, {"b", "c", 10.0}}, {{"a", "b", "c"}});
  }
  if (name == "FIX-MERGE") {
    return build({"1", "2", "3", "4"}, {{"1", "2", 4.0}, {"3", "4", 4.0}, {"2", "3", 1.0}, {"1", "4", 1.0}},
                 {{"1", "3"}, {"2", "4"}});
  }
  if (name == "FIX-GREEDY-TRAP") {
    // keeping the heaviest edge v1-v2 blocks every later insertion: greedy 14, optimum 9
    return build({"v1", "v2", "v3", "v4", "v5"},
                 {{"v1", "v2", 9.0}, {"v1", "v3", 6.0}, {"v1", "v4", 7.0}, {"v1", "v5", 1.0}, {"v3", "v5", 8.0}},
                 {{"v2", "v4"}, {"v2", "v3"}});
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace fusion
