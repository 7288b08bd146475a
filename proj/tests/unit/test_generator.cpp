#include "doctest.h"
#include "fusion/errors.hpp"
#include "fusion/generator.hpp"
#include "fusion/io.hpp"
#include "helpers.hpp"

using namespace fusion;

TEST_CASE("forbidden set and bad vertex counts") {
  CHECK(forbidden_set_count(60) == 5);
  CHECK(forbidden_set_count(64) == 5);
  CHECK(forbidden_set_count(1024) == 7);
  CHECK(forbidden_set_count(32768) == 11);
  CHECK(bad_vertex_count(7) == 6);
  CHECK(bad_vertex_count(5) == 4);
  CHECK(bad_vertex_count(4) == 3);
  CHECK(bad_vertex_count(1) == 1);
  CHECK(forbidden_set_count(60, LogBase::two) == 6);
  CHECK(forbidden_set_count(1000, LogBase::ten) == 3);
  CHECK(parse_log_base("e") == LogBase::natural);
  CHECK(parse_log_base("2") == LogBase::two);
  CHECK_THROWS_AS(parse_log_base("3"), InvalidArgument);
}

TEST_CASE("generated instances follow the protocol") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{60, 90}, {64, 192}, {200, 300}}) {
      CAPTURE(seed);
      CAPTURE(n);
      const auto inst = random_instance({.nodes = n, .edges = m, .seed = seed});
      const auto& g = inst.graph();
      CHECK(g.is_connected());
      CHECK(validate(inst).ok());
      CHECK(inst.forbidden_count() == forbidden_set_count(n));
      for (const auto& f : inst.forbidden()) CHECK(f.size() == 3);
      for (const auto& e : g.edges()) {
        CHECK(e.weight > 0.0);
        CHECK(e.weight < 1.0);
      }
      CHECK(std::abs(static_cast<double>(g.vertex_count()) - n) <= 0.15 * n);
      CHECK(std::abs(static_cast<double>(g.edge_count()) - m) <= 0.15 * m);
    }
  }
}

TEST_CASE("each forbidden set has one vertex from a small bad pool") {
  const auto inst = random_instance({.nodes = 1024, .edges = 1536, .seed = 9});
  const std::size_t b = inst.forbidden_count(), a = bad_vertex_count(b);
  CHECK(b == 7);
  // count vertices appearing in sets; bad vertices can repeat, good ones rarely do
  std::map<Vertex, int> seen;
  for (const auto& f : inst.forbidden()) {
    for (auto v : f) ++seen[v];
  }
  CHECK(seen.size() <= a + 2 * b);
}

TEST_CASE("generation is deterministic per seed") {
  const GenSpec spec{.nodes = 60, .edges = 90, .seed = 42};
  CHECK(io::instance_to_json(random_instance(spec)) == io::instance_to_json(random_instance(spec)));
  GenSpec other = spec;
  other.seed = 43;
  CHECK(io::instance_to_json(random_instance(spec)) != io::instance_to_json(random_instance(other)));
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(random_instance({.nodes = 3, .edges = 3}), InvalidArgument);
  CHECK_THROWS_AS(random_instance({.nodes = 10, .edges = 5}), InvalidArgument);
  CHECK_THROWS_AS(random_instance({.nodes = 10, .edges = 50}), InvalidArgument);
  CHECK_THROWS_AS(random_instance({.nodes = 10, .edges = 12, .weight_dist = "normal"}), InvalidArgument);
}

TEST_CASE("fixtures") {
  const auto names = fixture_names();
  CHECK(names.size() == 6);
  for (const auto& name : names) CHECK(is_fixture_name(name));
  CHECK(is_fixture_name("FIX-PATH:7"));
  CHECK_FALSE(is_fixture_name("FIX-OTHER"));
  const auto path = fixture("FIX-PATH:7");
  CHECK(path.graph().edge(testing::edge(path.graph(), "v3", "v4")).weight == 7.0);
  CHECK_THROWS_AS(fixture("FIX-PATH:abc"), InvalidArgument);
  CHECK_THROWS_AS(fixture("FIX-PATH:-1"), InvalidArgument);

  const auto tree = fixture("FIX-GH-TREE");
  CHECK(tree.graph().vertex_count() == 11);
  CHECK(tree.graph().is_tree());
  CHECK(tree.graph().total_weight() == doctest::Approx(16.8));
}
