#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegagraph/component_system.hpp"

namespace omegagraph {

/// No fan of any kind, so deleting a finite set leaves finitely many
/// components. Throws InvariantFailure if the component engine disagrees.
bool is_tough(const PatternGraph& g);

/// Toughness of the end of one strip.
struct EndWitness {
  std::string strip;
  bool tough = false;
  /// Tough end: deleting this set leaves the strip tail in a fan-free component.
  VertexSet separator;
  /// Non-tough end: the periodic fan hanging off every period, as "pfan:<strip>".
  std::optional<std::string> periodic_fan;
};

/// One entry per strip. Each tough witness is verified by deletion.
std::vector<EndWitness> end_witnesses(const PatternGraph& g);
bool is_end_tough(const PatternGraph& g);

enum class Trichotomy : std::uint8_t { Tough, OnePointCase, NeitherCase };
std::string to_string(Trichotomy t);

struct Classification {
  bool tough = false;
  bool end_tough = false;
  Trichotomy trichotomy = Trichotomy::NeitherCase;
  std::vector<EndWitness> ends;
};

Classification classify(const PatternGraph& g);

/// Why v has the degree it has. Infinite degree comes from dominated strips,
/// critical sets containing v, or both.
struct DegreeExplanation {
  std::optional<std::size_t> finite_degree;
  std::vector<std::string> dominated_strips;
  std::vector<VertexSet> critical_sets;

  bool is_finite() const { return finite_degree.has_value(); }
};

/// Throws UnknownVertex; throws InvariantFailure if an infinite-degree vertex
/// gets no validated explanation.
DegreeExplanation infinite_degree_explanation(const PatternGraph& g, const VertexId& v);

/// Critical sets with at most max_size vertices whose strip periods are below
/// horizon, each confirmed by deletion. Sorted.
std::vector<VertexSet> enumerate_critical(const PatternGraph& g, std::size_t max_size,
                                          std::uint64_t horizon);

}  // namespace omegagraph
