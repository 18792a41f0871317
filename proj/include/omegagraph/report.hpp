#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "omegagraph/classify.hpp"
#include "omegagraph/gamma.hpp"

namespace omegagraph {

/// Bounds shared by the analysis drivers. Every report echoes them.
struct ReportOptions {
  std::uint64_t horizon = 3;  // strip periods t < horizon
  std::uint64_t copies = 1;   // fan copies k < copies when sampling
  std::size_t max_size = 0;   // critical-set size bound; 0 = |core| + largest period
  std::size_t seps_size = 1;  // |X| bound for sampled separations
  std::uint64_t seed = 0;     // drives the sampled deletion sets
};

std::size_t default_max_size(const PatternGraph& g);

/// ∅ ⊆ core ⊆ core ∪ period-0 strip vertices, duplicates dropped.
std::vector<VertexSet> default_chain(const PatternGraph& g);

nlohmann::json to_json(const VertexSet& x);
nlohmann::json to_json(const ComponentSystem& cs);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const InverseSystemReport& r);
nlohmann::json to_json(const FduSpace& space);
nlohmann::json to_json(const LimitPoint& p);
nlohmann::json to_json(const TangleVerdict& v, const Orientation& o);
nlohmann::json to_json(const Distinction& d);
nlohmann::json graph_summary(const PatternGraph& g);

/// Classification, bounded critical enumeration and the Γ-system check on the
/// default chain.
nlohmann::json analyze(const PatternGraph& g, const ReportOptions& options);

/// analyze() plus component systems (default chain and seeded samples),
/// tangle checks for every point and distinguishing separations for every pair.
nlohmann::json full_report(const PatternGraph& g, const ReportOptions& options);

/// Separations over every X with |X| ≤ seps_size inside the sampling window.
std::vector<Separation> auto_separations(SystemCache& cache, const ReportOptions& options);

/// Graphviz rendering of a truncation; boundary vertices are drawn as boxes.
std::string truncation_to_dot(const FiniteGraph& t, const std::string& name = "G");

}  // namespace omegagraph
