#pragma once

#include <string>
#include <vector>

#include "omegagraph/pattern_graph.hpp"
#include "omegagraph/spec_io.hpp"

namespace omegagraph::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(OMEGAGRAPH_FIXTURE_DIR) + "/" + name + ".json";
}

inline PatternGraph fixture(const std::string& name) { return load_graph(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"star", "ray", "comb", "domray", "thetafan", "combo"};
  return names;
}

inline VertexId core(const std::string& n) { return VertexId::core(n); }
inline VertexId sv(std::uint64_t t, const std::string& l = "p", const std::string& s = "s1") {
  return VertexId::strip(s, t, l);
}

}  // namespace omegagraph::testing
