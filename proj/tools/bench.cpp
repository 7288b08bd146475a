#include "bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "fusion/errors.hpp"
#include "fusion/solve.hpp"

namespace fusion::cli {

std::vector<BenchSize> parse_sizes(const std::string& text) {
  std::vector<BenchSize> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw InvalidArgument("bad size '" + item + "', expected NxM");
    try {
      std::size_t used_n = 0;
      std::size_t used_m = 0;
      const std::string ns = item.substr(0, x);
      const std::string ms = item.substr(x + 1);
      BenchSize s{std::stoul(ns, &used_n), std::stoul(ms, &used_m)};
      if (used_n != ns.size() || used_m != ms.size()) throw std::invalid_argument(item);
      sizes.push_back(s);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad size '" + item + "', expected NxM");
    }
  }
  if (sizes.empty()) throw InvalidArgument("no sizes given");
  return sizes;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const BenchSize& size : config.sizes) {
    GenSpec spec;
    spec.nodes = size.nodes;
    spec.edges = size.edges;
    spec.seed = config.seed;
    spec.log_base = config.log_base;
    const FusionInstance instance = random_instance(spec);
    BenchRow row;
    row.target = size;
    row.nodes = instance.graph().vertex_count();
    row.edges = instance.graph().edge_count();
    row.forbidden = instance.forbidden_count();
    for (const std::string& name : config.solvers) {
      BenchCell cell;
      cell.solver = name;
      SolverOptions options;
      options.seed = config.seed;
      const auto start = std::chrono::steady_clock::now();
      try {
        const SolveReport report = run_solver(instance, name, options);
        cell.cut_weight = report.cut_weight;
        cell.feasible = is_feasible(instance, report.coloring);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.cells.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows, const std::vector<std::string>& solvers,
                         const std::string& format) {
  if (format != "csv" && format != "md") throw InvalidArgument("unknown bench format '" + format + "'");
  std::vector<std::string> header{"nodes", "edges", "forbidden"};
  for (const auto& s : solvers) {
    header.push_back(s + "_cut");
    header.push_back(s + "_ms");
  }
  auto number = [](const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return std::string(buf);
  };
  std::vector<std::vector<std::string>> table;
  for (const BenchRow& row : rows) {
    std::vector<std::string> line{std::to_string(row.nodes), std::to_string(row.edges),
                                  std::to_string(row.forbidden)};
    for (const BenchCell& cell : row.cells) {
      line.push_back(cell.cut_weight ? number("%.6f", *cell.cut_weight) : "n/a");
      line.push_back(cell.cut_weight ? number("%.3f", cell.seconds * 1e3) : "n/a");
    }
    table.push_back(std::move(line));
  }

  std::string out;
  auto join = [&](const std::vector<std::string>& cells, const std::string& sep, const std::string& lead,
                  const std::string& tail) {
    out += lead;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      out += cells[i];
    }
    out += tail + "\n";
  };
  if (format == "csv") {
    join(header, ",", "", "");
    for (const auto& line : table) join(line, ",", "", "");
  } else {
    join(header, " | ", "| ", " |");
    join(std::vector<std::string>(header.size(), "---"), " | ", "| ", " |");
    for (const auto& line : table) join(line, " | ", "| ", " |");
  }
  return out;
}

}  // namespace fusion::cli
