#pragma once

// Seeded generators for small valid pattern graphs and deletion sets.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "omegagraph/pattern_graph.hpp"

namespace omegagraph::testing {

class RandomGraphs {
 public:
  explicit RandomGraphs(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  GraphSpec spec() {
    GraphSpec g;
    const int cores = uniform(0, 3);
    for (int i = 0; i < cores; ++i) g.core.vertices.push_back("c" + std::to_string(i));
    for (int i = 0; i < cores; ++i) {
      for (int j = i + 1; j < cores; ++j) {
        if (coin(0.3)) g.core.edges.emplace_back(g.core.vertices[i], g.core.vertices[j]);
      }
    }
    const int strips = uniform(0, 2);
    for (int s = 0; s < strips; ++s) {
      StripSpec strip;
      strip.id = "s" + std::to_string(s);
      strip.period = connected_template("p" + std::to_string(s) + "_", uniform(1, 2));
      const auto& locals = strip.period.vertices;
      const int inter = uniform(1, 2);
      for (int e = 0; e < inter; ++e) strip.inter_period_edges.emplace_back(pick(locals), pick(locals));
      if (cores > 0) {
        const int attachments = uniform(0, 2);
        for (int a = 0; a < attachments; ++a) {
          strip.core_attachments.push_back({pick(g.core.vertices), static_cast<std::uint64_t>(uniform(0, 2)), pick(locals)});
        }
        if (coin(0.3)) g.dominations.push_back({pick(g.core.vertices), strip.id, pick(locals)});
      }
      if (coin(0.45)) {
        strip.periodic_fan = fan("pf" + std::to_string(s), "l" + std::to_string(s) + "_", locals, /*allow_empty=*/false);
      }
      g.strips.push_back(std::move(strip));
    }
    const int fans = uniform(0, 2);
    for (int f = 0; f < fans; ++f) {
      g.fans.push_back(fan("f" + std::to_string(f), "u" + std::to_string(f) + "_", g.core.vertices, /*allow_empty=*/true));
    }
    return g;
  }

  /// A random set of at most max_size vertices among small coordinates.
  VertexSet vertex_set(const PatternGraph& g, std::size_t max_size) {
    const auto pool = candidates(g);
    VertexSet out;
    if (pool.empty()) return out;
    const auto size = static_cast<std::size_t>(uniform(0, static_cast<int>(max_size)));
    for (std::size_t i = 0; i < size; ++i) out.insert(pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))]);
    return out;
  }

  static std::vector<VertexId> candidates(const PatternGraph& g) {
    std::vector<VertexId> pool;
    const auto& spec = g.spec();
    for (const auto& c : spec.core.vertices) pool.push_back(VertexId::core(c));
    for (const auto& s : spec.strips) {
      for (std::uint64_t t = 0; t < 4; ++t) {
        for (const auto& l : s.period.vertices) pool.push_back(VertexId::strip(s.id, t, l));
      }
      if (!s.periodic_fan) continue;
      for (std::uint64_t t = 0; t < 3; ++t) {
        for (std::uint64_t k = 0; k < 2; ++k) {
          for (const auto& l : s.periodic_fan->shape.vertices) pool.push_back(VertexId::periodic_fan(s.id, t, k, l));
        }
      }
    }
    for (const auto& f : spec.fans) {
      for (std::uint64_t k = 0; k < 3; ++k) {
        for (const auto& l : f.shape.vertices) pool.push_back(VertexId::fan(f.id, k, l));
      }
    }
    return pool;
  }

 private:
  const std::string& pick(const std::vector<std::string>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  TemplateGraph connected_template(const std::string& prefix, int n) {
    TemplateGraph t;
    for (int i = 0; i < n; ++i) t.vertices.push_back(prefix + std::to_string(i));
    for (int i = 1; i < n; ++i) t.edges.emplace_back(t.vertices[static_cast<std::size_t>(uniform(0, i - 1))], t.vertices[static_cast<std::size_t>(i)]);
    return t;
  }

  FanSpec fan(const std::string& id, const std::string& prefix, const std::vector<std::string>& hosts, bool allow_empty) {
    FanSpec f;
    f.id = id;
    f.shape = connected_template(prefix, uniform(1, 2));
    for (const auto& h : hosts) {
      if (coin(0.5)) f.attachment_set.push_back(h);
    }
    if (f.attachment_set.empty() && !hosts.empty() && (!allow_empty || coin(0.7))) f.attachment_set.push_back(pick(hosts));
    for (const auto& a : f.attachment_set) {
      f.attachment_edges.emplace_back(pick(f.shape.vertices), a);
      if (coin(0.3)) f.attachment_edges.emplace_back(pick(f.shape.vertices), a);
    }
    std::sort(f.attachment_edges.begin(), f.attachment_edges.end());
    f.attachment_edges.erase(std::unique(f.attachment_edges.begin(), f.attachment_edges.end()), f.attachment_edges.end());
    return f;
  }

  std::mt19937_64 rng_;
};

}  // namespace omegagraph::testing
