#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "fusion/instance.hpp"

namespace testing {

inline fusion::Vertex id(const fusion::WeightedGraph& g, const std::string& label) {
  const auto v = g.find_vertex(label);
  REQUIRE_MESSAGE(v.has_value(), "missing vertex " << label);
  return *v;
}

inline std::vector<fusion::Vertex> ids(const fusion::WeightedGraph& g, const std::vector<std::string>& labels) {
  std::vector<fusion::Vertex> out;
  for (const auto& l : labels) out.push_back(id(g, l));
  return out;
}

inline fusion::EdgeId edge(const fusion::WeightedGraph& g, const std::string& a, const std::string& b) {
  const auto e = g.find_edge(id(g, a), id(g, b));
  REQUIRE_MESSAGE(e.has_value(), "missing edge " << a << "-" << b);
  return *e;
}

inline std::vector<std::vector<std::string>> named(const fusion::WeightedGraph& g, const fusion::Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : p) {
    std::vector<std::string> names;
    for (auto v : block) names.push_back(g.label(v));
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline fusion::WeightedGraph labelled(std::vector<std::string> labels,
                                      const std::vector<std::tuple<std::string, std::string, double>>& edges) {
  std::vector<fusion::Edge> es;
  auto find = [&](const std::string& l) {
    return static_cast<fusion::Vertex>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (const auto& [a, b, w] : edges) es.push_back({find(a), find(b), w});
  for (auto& e : es) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return fusion::WeightedGraph(std::move(labels), es);
}

}  // namespace testing
