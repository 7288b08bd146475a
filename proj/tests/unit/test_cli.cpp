#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "bench.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "fusion/generator.hpp"
#include "fusion/io.hpp"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fusion::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fusion_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { fusion::io::write_file(p, text); }

}  // namespace

TEST_CASE("solve prints a report") {
  const auto r = run({"solve", "FIX-PATH", "--solver", "brute"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["cut_weight"].get<double>() == 2.0);
  CHECK(doc["color_count"] == 3);
  CHECK(doc["solver"] == "brute");
}

TEST_CASE("solve then eval passes for every solver") {
  const std::vector<std::vector<std::string>> cases{
      {"FIX-PATH", "brute"},        {"FIX-PATH", "twocolor"},       {"FIX-PATH", "greedy-subgraph"},
      {"FIX-PATH", "greedy-color"}, {"FIX-PATH", "greedy-match"},   {"FIX-PATH", "gomoryhu"},
      {"FIX-SINGLE", "single"},     {"FIX-SINGLE", "single-gh"},    {"FIX-2FS-TREE", "two"},
      {"FIX-2FS-TREE", "tree-greedy"}, {"FIX-2FS-TREE", "tree-pd"}, {"FIX-GH-TREE", "tree-greedy"},
      {"FIX-GREEDY-TRAP", "greedy-subgraph"}, {"FIX-MERGE", "gomoryhu"}};
  for (const auto& c : cases) {
    CAPTURE(c[1]);
    const auto sol = scratch(c[0] + "-" + c[1] + ".json");
    const auto s = run({"solve", c[0], "--solver", c[1], "--seed", "5", "-o", sol.string()});
    REQUIRE(s.code == 0);
    const auto e = run({"eval", c[0], sol.string()});
    CHECK(e.code == 0);
    CHECK(e.out.find("feasible: yes") != std::string::npos);
    const auto doc = json::parse(fusion::io::read_file(sol));
    char expect[64];
    std::snprintf(expect, sizeof expect, "cut_weight: %.17g", doc["cut_weight"].get<double>());
    CHECK(e.out.find(expect) != std::string::npos);
  }

  // the multiway solver answers the instance whose forbidden sets are the terminal pairs
  const auto tree = fusion::fixture("FIX-2FS-TREE");
  const std::vector<std::vector<fusion::Vertex>> groups{{*tree.graph().find_vertex("s"), *tree.graph().find_vertex("s'")}};
  const auto mmc = scratch("multiway-instance.json");
  write(mmc, fusion::io::instance_to_json(fusion::mmc_to_fusion(tree.graph(), groups)));
  const auto sol = scratch("multiway.json");
  const auto m = run({"solve", mmc.string(), "--solver", "multiway", "--terminals", "s,s'", "-o", sol.string()});
  REQUIRE(m.code == 0);
  CHECK(run({"eval", mmc.string(), sol.string()}).code == 0);
}

TEST_CASE("solve reads instance files and honours options") {
  const auto inst = scratch("gen.json");
  REQUIRE(run({"generate", "--nodes", "10", "--edges", "14", "--seed", "3", "-o", inst.string()}).code == 0);
  const auto a = run({"solve", inst.string(), "--solver", "twocolor"});
  CHECK(a.code == 0);
  CHECK(a.err.find("brute force optimum") != std::string::npos);
  CHECK(run({"solve", inst.string(), "--solver", "gomoryhu", "--merge", "greedy"}).code == 0);
  CHECK(run({"solve", inst.string(), "--solver", "gomoryhu", "--merge", "off", "--merge-threshold", "3"}).code == 0);
  CHECK(run({"solve", inst.string(), "--solver", "greedy-color", "--order", "forbidden-degree"}).err.find(
            "order=forbidden-degree") != std::string::npos);
  CHECK(run({"solve", inst.string(), "--solver", "brute", "--unbounded-colors"}).code == 0);
  CHECK(run({"solve", "FIX-2FS-TREE", "--solver", "tree-pd", "--no-prune"}).code == 0);
}

TEST_CASE("eval rejects infeasible or inconsistent solutions") {
  const auto sol = scratch("tampered.json");
  write(sol, R"({"coloring":{"v1":0,"v2":0,"v3":1,"v4":1}})");
  const auto e = run({"eval", "FIX-PATH", sol.string()});
  CHECK(e.code == 3);
  CHECK(e.out.find("feasible: no") != std::string::npos);

  const auto good = scratch("good.json");
  REQUIRE(run({"solve", "FIX-PATH", "--solver", "brute", "-o", good.string()}).code == 0);
  auto doc = json::parse(fusion::io::read_file(good));
  doc["removed_edges"] = json::array({json::array({"v1", "v4"})});
  write(sol, doc.dump());
  CHECK(run({"eval", "FIX-PATH", sol.string()}).code == 3);

  doc = json::parse(fusion::io::read_file(good));
  doc["coloring"]["v2"] = 0;
  write(sol, doc.dump());
  CHECK(run({"eval", "FIX-PATH", sol.string()}).code == 3);
}

TEST_CASE("convert between forms") {
  const auto sol = scratch("three.json");
  write(sol, R"({"coloring":{"v1":0,"v2":1,"v3":2,"v4":2}})");
  const auto sub = run({"convert", "FIX-PATH", sol.string(), "--to", "subgraph"});
  REQUIRE(sub.code == 0);
  const auto s = json::parse(sub.out);
  CHECK(s["form"] == "subgraph");
  CHECK(s["kept_edges"] == json::array({json::array({"v3", "v4"})}));
  CHECK(s["kept_weight"].get<double>() == 3.0);

  const auto blocks = scratch("blocks.json");
  write(blocks, sub.out);
  const auto m = run({"convert", "FIX-PATH", blocks.string(), "--to", "matching"});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["blocks"].size() == 3);
  const auto c = run({"convert", "FIX-PATH", blocks.string(), "--to", "coloring"});
  CHECK(json::parse(c.out)["cut_weight"].get<double>() == 2.0);

  write(sol, R"({"coloring":{"v1":0,"v2":0,"v3":1,"v4":1}})");
  CHECK(run({"convert", "FIX-PATH", sol.string(), "--to", "matching"}).code == 1);
  CHECK(run({"convert", "FIX-PATH", sol.string(), "--to", "graph"}).code == 2);
}

TEST_CASE("gomoryhu writes a tree file") {
  const auto out = scratch("tree.json");
  REQUIRE(run({"gomoryhu", "FIX-SINGLE", "-o", out.string()}).code == 0);
  const auto doc = json::parse(fusion::io::read_file(out));
  CHECK(doc["edges"].size() == 2);
}

TEST_CASE("generate is deterministic and honours the seed variable") {
  const auto a = run({"generate", "--nodes", "60", "--edges", "90", "--seed", "7"});
  const auto b = run({"generate", "--nodes", "60", "--edges", "90", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["forbidden"].size() == 5);
  CHECK(run({"generate", "--nodes", "60", "--edges", "90", "--log-base", "2"}).code == 0);

  ::setenv("FUSION_SEED", "7", 1);
  const auto env = run({"generate", "--nodes", "60", "--edges", "90"});
  ::setenv("FUSION_SEED", "nope", 1);
  const auto bad = run({"generate", "--nodes", "60", "--edges", "90"});
  ::unsetenv("FUSION_SEED");
  CHECK(env.out == a.out);
  CHECK(bad.code == 2);
}

TEST_CASE("usage and solver errors map to exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "FIX-PATH"}).code == 2);
  CHECK(run({"solve", "FIX-PATH", "--solver", "magic"}).code == 2);
  CHECK(run({"solve", "FIX-PATH", "--solver", "brute", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto missing = run({"solve", "no-such-file.json", "--solver", "brute"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(run({"solve", "FIX-PATH", "--solver", "tree-greedy"}).code == 0);
  CHECK(run({"solve", "FIX-MERGE", "--solver", "tree-greedy"}).code == 1);
  CHECK(run({"solve", "FIX-PATH", "--solver", "single"}).code == 1);
  CHECK(run({"solve", "FIX-PATH", "--solver", "multiway"}).code == 1);
  CHECK(run({"solve", "FIX-PATH", "--solver", "multiway", "--terminals", "v1,zz"}).code == 1);
  CHECK(run({"bench", "--sizes", "60by90"}).code == 1);
  CHECK(run({"bench", "--solvers", "magic"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench prints one row per size") {
  const auto csv = run({"bench", "--sizes", "60x90", "--solvers", "twocolor,gomoryhu", "--seed", "7"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header == "nodes,edges,forbidden,twocolor_cut,twocolor_ms,gomoryhu_cut,gomoryhu_ms");
  CHECK(std::count(row.begin(), row.end(), ',') == 6);
  CHECK(row.find("n/a") == std::string::npos);

  const auto md = run({"bench", "--sizes", "60x90,64x192", "--format", "md", "--seed", "7"});
  REQUIRE(md.code == 0);
  CHECK(std::count(md.out.begin(), md.out.end(), '\n') == 4);
  CHECK(md.out.rfind("| nodes |", 0) == 0);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = FUSION_CLI_PATH;
  const auto sol = scratch("bin-tampered.json");
  write(sol, R"({"coloring":{"v1":0,"v2":0,"v3":1,"v4":1}})");
  const auto quiet = " > /dev/null 2>&1";
  auto status = [](int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; };
  CHECK(status(std::system((bin + " solve FIX-PATH --solver brute" + quiet).c_str())) == 0);
  CHECK(status(std::system((bin + " eval FIX-PATH " + sol.string() + quiet).c_str())) == 3);
  CHECK(status(std::system((bin + " solve" + quiet).c_str())) == 2);
}
