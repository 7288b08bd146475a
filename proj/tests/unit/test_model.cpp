#include <random>

#include "doctest.h"
#include "fusion/errors.hpp"
#include "fusion/exact.hpp"
#include "fusion/generator.hpp"
#include "fusion/heuristics.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fusion;
using testing::id;
using testing::ids;
using testing::labelled;

namespace {

Coloring color_by_label(const FusionInstance& inst, const std::map<std::string, std::uint32_t>& colors) {
  std::vector<std::uint32_t> out(inst.graph().vertex_count());
  for (const auto& [label, c] : colors) out[id(inst.graph(), label)] = c;
  return Coloring(out);
}

bool has(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validation reports each violation kind") {
  auto g = labelled({"a", "b", "c"}, {{"a", "c", 1}, {"b", "c", 1}});
  CHECK(has(validate(FusionInstance(g, {{0, 1}, {0, 1, 2}})), "antichain"));
  CHECK(has(validate(FusionInstance(g, {{0}})), "size < 2"));
  CHECK(has(validate(FusionInstance(g, {{0, 2}})), "edge"));
  CHECK(has(validate(FusionInstance(g, {{0, 9}})), "unknown"));
  CHECK(validate(fixture("FIX-PATH")).ok());
  CHECK_THROWS_AS(require_valid(FusionInstance(g, {{0}})), InvalidArgument);

  auto split = labelled({"a", "b", "c"}, {{"a", "b", 1}});
  const auto r = validate(FusionInstance(split, {{0, 2}}));
  CHECK(r.ok());
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("every fixture is valid") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(validate(fixture(name)).ok());
  }
  CHECK_THROWS_AS(fixture("FIX-NOPE"), InvalidArgument);
}

TEST_CASE("evaluation of the two and three color path solutions") {
  const auto inst = fixture("FIX-PATH");
  const auto two = color_by_label(inst, {{"v1", 0}, {"v2", 1}, {"v3", 1}, {"v4", 0}});
  const auto three = color_by_label(inst, {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 2}});
  CHECK(evaluate(inst, two).cut_weight == doctest::Approx(3.0));
  CHECK(evaluate(inst, three).cut_weight == doctest::Approx(2.0));
  CHECK(evaluate(inst, three).kept_weight == doctest::Approx(3.0));
  const Coloring mono(std::vector<std::uint32_t>(4, 0));
  CHECK(evaluate(inst, mono).cut_weight == 0.0);
  CHECK(evaluate(inst, mono).kept_weight == doctest::Approx(inst.graph().total_weight()));

  CHECK_FALSE(is_feasible(inst, mono));
  CHECK(is_feasible(inst, three));
  CHECK(is_feasible(inst, two));

  const Coloring short_coloring(std::vector<std::uint32_t>(3, 0));
  CHECK_THROWS_AS(evaluate(inst, short_coloring), InvalidArgument);
  CHECK_THROWS_AS(evaluate(inst, SubgraphSolution{{42}}), InvalidArgument);
  CHECK_THROWS_AS(evaluate(inst, MatchingSolution{{{0, 1}, {2, 7}}}), InvalidArgument);
  CHECK_THROWS_AS(evaluate(inst, MatchingSolution{{{0, 1}, {1, 2, 3}}}), InvalidArgument);
  CHECK_THROWS_AS(evaluate(inst, MatchingSolution{{{0, 1}, {2}}}), InvalidArgument);
}

TEST_CASE("a single forbidden set equal to V is broken by any two coloring") {
  auto g = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
  FusionInstance inst(g, {{0, 1, 2}});
  CHECK(is_feasible(inst, Coloring({0, 0, 1})));
  CHECK(is_feasible(inst, Coloring({1, 0, 0})));
  CHECK_FALSE(is_feasible(inst, Coloring({0, 0, 0})));
}

TEST_CASE("feasibility differs between colorings and subgraphs") {
  // color class {a, c} is not connected, so its components are feasible but the class is not
  auto g = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
  FusionInstance inst(g, {{0, 2}});
  const Coloring c({0, 1, 0});
  CHECK_FALSE(is_feasible(inst, c));
  CHECK(is_feasible(inst, SubgraphSolution{}));
}

TEST_CASE("coloring normalizes to first appearance order") {
  const Coloring a({5, 2, 5, 9});
  const Coloring b({0, 1, 0, 2});
  CHECK(a == b);
  CHECK(a.color_count() == 3);
  CHECK(a.classes() == Partition{{0, 2}, {1}, {3}});
}

TEST_CASE("conversion of the three color path solution keeps only v3-v4") {
  const auto inst = fixture("FIX-PATH");
  const auto& g = inst.graph();
  const auto three = color_by_label(inst, {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 2}});
  const auto sub = std::get<SubgraphSolution>(convert(inst, three, SolutionForm::subgraph));
  CHECK(sub.kept_edges == std::vector<EdgeId>{testing::edge(g, "v3", "v4")});
  CHECK(evaluate(inst, sub).kept_weight == doctest::Approx(3.0));
  CHECK(evaluate(inst, three).kept_weight == doctest::Approx(3.0));

  const Coloring mono(std::vector<std::uint32_t>(4, 0));
  CHECK_THROWS_AS(convert(inst, mono, SolutionForm::subgraph), InvalidArgument);
}

TEST_CASE("one block matching on a free instance converts to all edges") {
  auto g = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 2}, {"a", "c", 4}});
  FusionInstance inst(g, {});
  const auto col = std::get<Coloring>(convert(inst, MatchingSolution{{{0, 1, 2}}}, SolutionForm::coloring));
  CHECK(col == Coloring({0, 0, 0}));
  const auto sub = std::get<SubgraphSolution>(convert(inst, col, SolutionForm::subgraph));
  CHECK(sub.kept_edges.size() == 3);
}

TEST_CASE("the 11 vertex tree cut converts to the expected blocks") {
  const auto inst = fixture("FIX-GH-TREE");
  const auto& g = inst.graph();
  SubgraphSolution sub;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != testing::edge(g, "v4", "v8") && e != testing::edge(g, "v1", "v4")) sub.kept_edges.push_back(e);
  }
  CHECK(is_feasible(inst, sub));
  const auto m = std::get<MatchingSolution>(convert(inst, sub, SolutionForm::matching));
  CHECK(testing::named(g, m.blocks) ==
        std::vector<std::vector<std::string>>{{"v1", "v10", "v11"}, {"v2", "v3", "v4", "v5", "v6", "v9"}, {"v7", "v8"}});
  CHECK(evaluate(inst, m).cut_weight == doctest::Approx(3.76));
}

TEST_CASE("conversions preserve objective and feasibility on random solutions") {
  std::mt19937_64 rng(31);
  const SolutionForm forms[] = {SolutionForm::coloring, SolutionForm::subgraph, SolutionForm::matching};
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 150; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const auto inst = oracle::instance(rng, n, n / 2, 1 + trial % 3);
    std::vector<std::uint32_t> labels(n);
    for (auto& l : labels) l = static_cast<std::uint32_t>(rng() % 3);
    const Coloring c(labels);
    if (!is_feasible(inst, c)) continue;
    ++checked;
    const double base = evaluate(inst, c).cut_weight;
    for (auto a : forms) {
      const Solution x = convert(inst, c, a);
      CHECK(is_feasible(inst, x));
      for (auto b : forms) {
        const Solution y = convert(inst, x, b);
        CHECK(is_feasible(inst, y));
        const auto obj = evaluate(inst, y);
        CHECK(obj.cut_weight + obj.kept_weight == doctest::Approx(inst.graph().total_weight()).epsilon(1e-12));
        CHECK(std::abs(obj.cut_weight - base) <= 1e-9);
      }
    }
    const auto sub = std::get<SubgraphSolution>(convert(inst, c, SolutionForm::subgraph));
    for (const auto& block : connected_components(inst.graph(), sub.kept_edges)) {
      for (auto v : block) CHECK(c[v] == c[block[0]]);
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("subgraph round trip may grow the kept set but never loses weight") {
  auto g = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  FusionInstance inst(g, {});
  const SubgraphSolution sub{{testing::edge(g, "a", "b"), testing::edge(g, "b", "c")}};
  const auto m = convert(inst, sub, SolutionForm::matching);
  const auto c = convert(inst, m, SolutionForm::coloring);
  const auto back = std::get<SubgraphSolution>(convert(inst, c, SolutionForm::subgraph));
  CHECK(back.kept_edges.size() == 3);
  CHECK(evaluate(inst, back).kept_weight >= evaluate(inst, sub).kept_weight);
}

TEST_CASE("multi-multiway cut reduction") {
  auto g = labelled({"a", "b", "c", "d"}, {{"a", "d", 1}, {"b", "d", 1}, {"c", "d", 1}});
  const std::vector<std::vector<Vertex>> one{{0, 1, 2}};
  const auto multiway = mmc_to_fusion(g, one);
  CHECK(std::vector<VertexSet>(multiway.forbidden().begin(), multiway.forbidden().end()) ==
        std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
  const std::vector<std::vector<Vertex>> two{{0, 1}, {1, 2}};
  CHECK(mmc_to_fusion(g, two).forbidden_count() == 2);
  const std::vector<std::vector<Vertex>> dup{{0, 1}, {1, 0}};
  CHECK(mmc_to_fusion(g, dup).forbidden_count() == 1);
  const std::vector<std::vector<Vertex>> edge{{0, 3}};
  CHECK_THROWS_AS(mmc_to_fusion(g, edge), InvalidArgument);
  const std::vector<std::vector<Vertex>> small{{0}};
  CHECK_THROWS_AS(mmc_to_fusion(g, small), InvalidArgument);
}
