#include "fusion/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fusion/errors.hpp"

namespace fusion::io {

using nlohmann::json;

namespace {

void emit(const json& value, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        emit(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(value.begin(), value.end(),
                                     [](const json& v) { return v.is_structured(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out += ", ";
          emit(value[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        emit(value[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double d = value.get<double>();
      if (!std::isfinite(d)) throw InvalidArgument("cannot serialize a non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += value.dump();
  }
}

std::string stable_dump(const json& value) {
  std::string out;
  emit(value, out, 0);
  out += "\n";
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Vertex lookup(const WeightedGraph& g, const json& label) {
  if (!label.is_string()) throw InvalidArgument("vertex labels must be strings");
  const auto v = g.find_vertex(label.get<std::string>());
  if (!v) throw InvalidArgument("unknown vertex '" + label.get<std::string>() + "'");
  return *v;
}

EdgeId lookup_edge(const WeightedGraph& g, const json& pair) {
  if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("edges must be [u, v] pairs");
  const auto id = g.find_edge(lookup(g, pair[0]), lookup(g, pair[1]));
  if (!id) throw InvalidArgument("unknown edge " + pair.dump());
  return *id;
}

json edge_pair(const WeightedGraph& g, EdgeId id) {
  return json::array({g.label(g.edge(id).u), g.label(g.edge(id).v)});
}

}  // namespace

FusionInstance parse_instance(std::string_view json_text) {
  const json doc = parse(json_text);
  try {
    std::vector<std::string> labels;
    for (const auto& v : doc.at("vertices")) labels.push_back(v.get<std::string>());
    std::unordered_map<std::string, Vertex> index;
    for (Vertex i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    auto id = [&](const json& label) {
      const auto it = index.find(label.get<std::string>());
      if (it == index.end()) throw InvalidArgument("unknown vertex '" + label.get<std::string>() + "'");
      return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) edges.push_back({id(e.at("u")), id(e.at("v")), e.at("w").get<double>()});
    std::vector<VertexSet> forbidden;
    if (doc.contains("forbidden")) {
      for (const auto& f : doc.at("forbidden")) {
        VertexSet set;
        for (const auto& v : f) set.push_back(id(v));
        forbidden.push_back(std::move(set));
      }
    }
    return FusionInstance(WeightedGraph(std::move(labels), edges), std::move(forbidden));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad instance file: ") + e.what());
  }
}

std::string instance_to_json(const FusionInstance& instance) {
  const WeightedGraph& g = instance.graph();
  json doc;
  doc["vertices"] = json::array();
  for (const auto& l : g.labels()) doc["vertices"].push_back(l);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"w", e.weight}});
  doc["forbidden"] = json::array();
  for (const VertexSet& f : instance.forbidden()) {
    json set = json::array();
    for (Vertex v : f) set.push_back(g.label(v));
    doc["forbidden"].push_back(std::move(set));
  }
  return stable_dump(doc);
}

namespace {

json coloring_json(const WeightedGraph& g, const Coloring& c) {
  json obj = json::object();
  for (Vertex v = 0; v < c.size(); ++v) obj[g.label(v)] = c[v];
  return obj;
}

json removed_json(const WeightedGraph& g, const SubgraphSolution& s) {
  json arr = json::array();
  std::size_t k = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (k < s.kept_edges.size() && s.kept_edges[k] == id) {
      ++k;
      continue;
    }
    arr.push_back(edge_pair(g, id));
  }
  return arr;
}

}  // namespace

std::string report_to_json(const FusionInstance& instance, const SolveReport& report) {
  const WeightedGraph& g = instance.graph();
  json doc;
  doc["solver"] = report.solver;
  doc["seed"] = report.seed;
  doc["coloring"] = coloring_json(g, report.coloring);
  doc["removed_edges"] = removed_json(g, report.subgraph);
  doc["cut_weight"] = report.cut_weight;
  doc["kept_weight"] = report.kept_weight;
  doc["color_count"] = report.color_count;
  doc["runtime_ms"] = report.runtime_ms;
  return stable_dump(doc);
}

std::string solution_to_json(const FusionInstance& instance, const Solution& solution) {
  const WeightedGraph& g = instance.graph();
  json doc;
  const Objective obj = evaluate(instance, solution);
  doc["cut_weight"] = obj.cut_weight;
  doc["kept_weight"] = obj.kept_weight;
  if (const auto* c = std::get_if<Coloring>(&solution)) {
    doc["form"] = "coloring";
    doc["coloring"] = coloring_json(g, *c);
    doc["color_count"] = c->color_count();
  } else if (const auto* s = std::get_if<SubgraphSolution>(&solution)) {
    doc["form"] = "subgraph";
    doc["kept_edges"] = json::array();
    for (EdgeId id : s->kept_edges) doc["kept_edges"].push_back(edge_pair(g, id));
    doc["removed_edges"] = removed_json(g, *s);
  } else {
    const auto& m = std::get<MatchingSolution>(solution);
    doc["form"] = "matching";
    doc["blocks"] = json::array();
    for (const Block& b : m.blocks) {
      json block = json::array();
      for (Vertex v : b) block.push_back(g.label(v));
      doc["blocks"].push_back(std::move(block));
    }
  }
  return stable_dump(doc);
}

ParsedSolution parse_solution(const FusionInstance& instance, std::string_view json_text) {
  const json doc = parse(json_text);
  const WeightedGraph& g = instance.graph();
  auto edge_list = [&](const json& arr) {
    std::vector<EdgeId> ids;
    for (const auto& p : arr) ids.push_back(lookup_edge(g, p));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };
  auto complement = [&](const std::vector<EdgeId>& removed) {
    SubgraphSolution s;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (!std::binary_search(removed.begin(), removed.end(), id)) s.kept_edges.push_back(id);
    }
    return s;
  };
  try {
    ParsedSolution out{Coloring{}, std::nullopt};
    if (doc.contains("coloring")) {
      const json& obj = doc.at("coloring");
      if (!obj.is_object()) throw InvalidArgument("coloring must be an object");
      std::vector<std::int64_t> colors(g.vertex_count(), -1);
      for (auto it = obj.begin(); it != obj.end(); ++it) {
        const Vertex v = lookup(g, json(it.key()));
        const auto c = it.value().get<std::int64_t>();
        if (c < 0) throw InvalidArgument("colors must be non-negative");
        colors[v] = c;
      }
      std::vector<std::uint32_t> raw;
      for (Vertex v = 0; v < colors.size(); ++v) {
        if (colors[v] < 0) throw InvalidArgument("coloring misses vertex '" + g.label(v) + "'");
        raw.push_back(static_cast<std::uint32_t>(colors[v]));
      }
      out.solution = Coloring(std::move(raw));
      if (doc.contains("removed_edges")) out.listed_subgraph = complement(edge_list(doc.at("removed_edges")));
    } else if (doc.contains("blocks")) {
      Partition blocks;
      for (const auto& b : doc.at("blocks")) {
        Block block;
        for (const auto& v : b) block.push_back(lookup(g, v));
        blocks.push_back(std::move(block));
      }
      out.solution = MatchingSolution{canonical_partition(std::move(blocks))};
    } else if (doc.contains("kept_edges")) {
      out.solution = SubgraphSolution{edge_list(doc.at("kept_edges"))};
    } else if (doc.contains("removed_edges")) {
      out.solution = complement(edge_list(doc.at("removed_edges")));
    } else {
      throw InvalidArgument("solution file has no coloring, blocks, kept_edges or removed_edges");
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad solution file: ") + e.what());
  }
}

std::string tree_to_json(const WeightedGraph& graph, const GomoryHuTree& tree) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& l : graph.labels()) doc["vertices"].push_back(l);
  doc["edges"] = json::array();
  for (const Edge& e : tree.edges) {
    doc["edges"].push_back({{"u", graph.label(e.u)}, {"v", graph.label(e.v)}, {"w", e.weight}});
  }
  return stable_dump(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace fusion::io
