#include <random>

#include "doctest.h"
#include "fusion/errors.hpp"
#include "fusion/generator.hpp"
#include "fusion/tree_solver.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fusion;
using testing::labelled;

namespace {

std::vector<double> weights_of(const WeightedGraph& g) {
  std::vector<double> w;
  for (const auto& e : g.edges()) w.push_back(e.weight);
  return w;
}

// minimum-weight set of columns covering every row, by subset enumeration
double cover_optimum(const ConstraintMatrix& m, const std::vector<double>& w) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.columns); ++s) {
    bool ok = true;
    for (const auto& row : m.rows) {
      ok = ok && std::any_of(row.begin(), row.end(), [&](EdgeId j) { return s >> j & 1; });
    }
    if (!ok) continue;
    double c = 0.0;
    for (std::size_t j = 0; j < m.columns; ++j) {
      if (s >> j & 1) c += w[j];
    }
    best = std::min(best, c);
  }
  return best;
}

bool covers(const ConstraintMatrix& m, const std::vector<EdgeId>& cols) {
  return std::all_of(m.rows.begin(), m.rows.end(), [&](const std::vector<EdgeId>& row) {
    return std::any_of(row.begin(), row.end(),
                       [&](EdgeId j) { return std::find(cols.begin(), cols.end(), j) != cols.end(); });
  });
}

}  // namespace

TEST_CASE("constraint matrix of the 11 vertex tree") {
  const auto inst = fixture("FIX-GH-TREE");
  const auto& g = inst.graph();
  const auto m = constraint_matrix(inst);
  CHECK(m.columns == 10);
  REQUIRE(m.rows.size() == 2);
  // forbidden sets are stored sorted; {v1,v2,v3} precedes {v5,v8}
  std::vector<EdgeId> first{testing::edge(g, "v1", "v4"), testing::edge(g, "v2", "v4"), testing::edge(g, "v3", "v4")};
  std::vector<EdgeId> second{testing::edge(g, "v4", "v5"), testing::edge(g, "v4", "v8")};
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  CHECK(m.rows[0] == first);
  CHECK(m.rows[1] == second);
  CHECK(m.max_column_sum() == 1);
}

TEST_CASE("constraint matrix of a path and a star") {
  auto path = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
  const VertexSet ac{0, 2};
  const auto pm = constraint_matrix(FusionInstance(path, {ac}));
  CHECK(pm.rows == std::vector<std::vector<EdgeId>>{{0, 1}});

  auto star = labelled({"c", "x", "y", "z"}, {{"c", "x", 1}, {"c", "y", 1}, {"c", "z", 1}});
  const auto sm = constraint_matrix(FusionInstance(star, {{1, 2}, {2, 3}}));
  const EdgeId cx = testing::edge(star, "c", "x"), cy = testing::edge(star, "c", "y"), cz = testing::edge(star, "c", "z");
  CHECK(sm.rows[0] == std::vector<EdgeId>{cx, cy});
  CHECK(sm.rows[1] == std::vector<EdgeId>{cy, cz});
  CHECK(sm.column_sums() == std::vector<std::size_t>{1, 2, 1});
  CHECK(sm.max_column_sum() == 2);

  auto cycle = labelled({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  CHECK_THROWS_AS(constraint_matrix(FusionInstance(cycle, {})), InvalidArgument);
  CHECK_THROWS_AS(solve_tree_greedy(FusionInstance(cycle, {}), 0), InvalidArgument);
  CHECK_THROWS_AS(solve_tree_primal_dual(FusionInstance(cycle, {})), InvalidArgument);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == doctest::Approx(1.5));
  CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0));
}

TEST_CASE("greedy set cover on the 11 vertex tree") {
  const auto inst = fixture("FIX-GH-TREE");
  const auto& g = inst.graph();
  const auto m = constraint_matrix(inst);
  const auto w = weights_of(g);
  const auto r = greedy_set_cover(m, w, 0);
  REQUIRE(r.selected.size() == 2);
  CHECK(g.edge(r.selected[0]).weight == doctest::Approx(1.29));
  CHECK(g.edge(r.selected[1]).weight == doctest::Approx(2.47));
  CHECK(std::abs(r.cost - 3.76) <= 1e-9);

  const auto rep = solve_tree_greedy(inst, 0);
  CHECK(std::abs(rep.cut_weight - 3.76) <= 1e-9);
  CHECK(testing::named(g, rep.matching.blocks) ==
        std::vector<std::vector<std::string>>{{"v1", "v10", "v11"}, {"v2", "v3", "v4", "v5", "v6", "v9"}, {"v7", "v8"}});
}

TEST_CASE("greedy set cover is fooled by the two-set tree") {
  const auto inst = fixture("FIX-2FS-TREE");
  const auto& g = inst.graph();
  const auto r = greedy_set_cover(constraint_matrix(inst), weights_of(g), 0);
  REQUIRE(r.selected.size() == 2);
  CHECK(g.edge(r.selected[0]).weight == 2.0);
  CHECK(g.edge(r.selected[1]).weight == 5.0);
  CHECK(r.cost == 7.0);
  CHECK(solve_tree_greedy(inst, 0).cut_weight == 7.0);
}

TEST_CASE("a single row is covered by its lightest column") {
  ConstraintMatrix m{4, {{0, 2, 3}}};
  const std::vector<double> w{1.0, 0.1, 3.0, 2.0};
  const auto g = greedy_set_cover(m, w, 0);
  CHECK(g.selected == std::vector<EdgeId>{0});
  const auto p = primal_dual_set_cover(m, w);
  CHECK(p.selected == std::vector<EdgeId>{0});
  CHECK(p.cost == 1.0);
}

TEST_CASE("disjoint rows give the exact per-row minimum") {
  ConstraintMatrix m{5, {{0, 1}, {2, 3, 4}}};
  const std::vector<double> w{3.0, 2.0, 5.0, 1.0, 4.0};
  CHECK(m.max_column_sum() == 1);
  CHECK(primal_dual_set_cover(m, w).cost == 3.0);
  CHECK(greedy_set_cover(m, w, 3).cost == 3.0);
}

TEST_CASE("primal-dual on the two-set tree under both row orders") {
  const auto inst = fixture("FIX-2FS-TREE");
  const auto m = constraint_matrix(inst);
  const auto w = weights_of(inst.graph());
  for (const auto& order : std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}) {
    for (bool prune : {true, false}) {
      const auto r = primal_dual_set_cover(m, w, {prune, order});
      CHECK(covers(m, r.selected));
      CHECK(r.cost <= 12.0);
      if (prune) CHECK((r.cost == 6.0 || r.cost == 7.0));
    }
  }
  CHECK(primal_dual_set_cover(m, w, {false, {0, 1}}).cost == 8.0);
  CHECK(primal_dual_set_cover(m, w, {false, {1, 0}}).cost == 11.0);
  CHECK_THROWS_AS(primal_dual_set_cover(m, w, {true, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(primal_dual_set_cover(m, w, {true, {0}}), InvalidArgument);
  CHECK_THROWS_AS(greedy_set_cover(m, std::vector<double>{1.0}, 0), InvalidArgument);
}

TEST_CASE("greedy and primal-dual guarantees on random trees") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto inst = oracle::tree_instance(rng, n, 1 + trial % 4, 2, 4);
    const auto& g = inst.graph();
    const auto m = constraint_matrix(inst);
    const auto w = weights_of(g);
    const double opt = cover_optimum(m, w);
    CHECK(std::abs(opt - oracle::best_partition(inst).cut) <= 1e-9);
    const double c = static_cast<double>(m.max_column_sum());

    const auto gr = greedy_set_cover(m, w, trial);
    CHECK(covers(m, gr.selected));
    CHECK(gr.cost <= harmonic(m.max_column_sum()) * opt + 1e-9);
    for (bool prune : {true, false}) {
      const auto pd = primal_dual_set_cover(m, w, {prune, {}});
      CHECK(covers(m, pd.selected));
      CHECK(pd.cost <= c * opt + 1e-9);
    }

    const auto rep = solve_tree_greedy(inst, trial);
    CHECK(is_feasible(inst, rep.coloring));
    CHECK(rep.color_count == gr.selected.size() + 1);
    CHECK(std::abs(rep.cut_weight - gr.cost) <= 1e-9);
    const auto pdr = solve_tree_primal_dual(inst);
    CHECK(is_feasible(inst, pdr.coloring));
    CHECK(pdr.color_count == static_cast<std::size_t>(pdr.metrics.at("deleted_edges")) + 1);
  }
}
