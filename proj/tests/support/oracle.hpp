#pragma once

// Brute-force ground truth: connected components of a finite truncation
// minus X, by plain union-find over the explicit edge list.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "omegagraph/pattern_graph.hpp"

namespace omegagraph::testing {

struct OracleComponent {
  std::vector<VertexId> vertices;  // sorted
  VertexSet neighbourhood;         // X-vertices adjacent in the truncation
  bool touches_boundary = false;
};

inline std::vector<OracleComponent> oracle_components(const FiniteGraph& g, const VertexSet& x) {
  std::map<VertexId, std::size_t> index;
  for (const auto& v : g.vertices) {
    if (!x.count(v)) index.emplace(v, index.size());
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [u, v] : g.edges) {
    if (x.count(u) || x.count(v)) continue;
    parent[find(index.at(u))] = find(index.at(v));
  }
  std::map<std::size_t, OracleComponent> by_root;
  for (const auto& [v, i] : index) {
    auto& c = by_root[find(i)];
    c.vertices.push_back(v);
    if (g.boundary.count(v)) c.touches_boundary = true;
  }
  for (const auto& [u, v] : g.edges) {
    const bool ux = x.count(u) > 0;
    const bool vx = x.count(v) > 0;
    if (ux && !vx) by_root[find(index.at(v))].neighbourhood.insert(u);
    if (vx && !ux) by_root[find(index.at(u))].neighbourhood.insert(v);
  }
  std::vector<OracleComponent> out;
  for (auto& [root, c] : by_root) {
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
  return out;
}

/// Number of oracle components whose neighbourhood is exactly y.
inline std::size_t oracle_count_with_neighbourhood(const std::vector<OracleComponent>& comps, const VertexSet& y) {
  return static_cast<std::size_t>(
      std::count_if(comps.begin(), comps.end(), [&](const OracleComponent& c) { return c.neighbourhood == y; }));
}

/// Degree of v in the truncation.
inline std::size_t oracle_degree(const PatternGraph& g, const VertexId& v, TruncationBounds b) {
  const auto t = truncate(g, b);
  std::size_t n = 0;
  for (const auto& [a, c] : t.edges) n += (a == v || c == v);
  return n;
}

/// Neighbours of v on strip `strip` among its first `periods` periods.
inline std::size_t oracle_strip_neighbours(const PatternGraph& g, const VertexId& v, const std::string& strip,
                                           std::uint64_t periods) {
  const auto t = truncate(g, {periods, 1});
  std::size_t n = 0;
  for (const auto& [a, c] : t.edges) {
    if (a == v && c.kind == VertexKind::Strip && c.owner == strip) ++n;
    if (c == v && a.kind == VertexKind::Strip && a.owner == strip) ++n;
  }
  return n;
}

}  // namespace omegagraph::testing
