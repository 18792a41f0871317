#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omegagraph/vertex_id.hpp"

namespace omegagraph {

using LocalEdge = std::pair<std::string, std::string>;

/// A finite graph on local names (core, period template, fan template).
struct TemplateGraph {
  std::vector<std::string> vertices;
  std::vector<LocalEdge> edges;

  friend bool operator==(const TemplateGraph&, const TemplateGraph&) = default;
};

/// ω copies of `shape`, each joined to `attachment_set` by `attachment_edges`
/// (template local -> host vertex). For core fans the host vertices are core
/// names; for a strip's periodic fan they are local names of the period.
struct FanSpec {
  std::string id;
  TemplateGraph shape;
  std::vector<std::string> attachment_set;
  std::vector<LocalEdge> attachment_edges;

  friend bool operator==(const FanSpec&, const FanSpec&) = default;
};

struct CoreAttachment {
  std::string core;
  std::uint64_t period = 0;
  std::string local;

  friend bool operator==(const CoreAttachment&, const CoreAttachment&) = default;
};

/// A one-way infinite repetition of `period`; an inter-period edge (u, v)
/// joins local u of period t with local v of period t + 1, for every t.
struct StripSpec {
  std::string id;
  TemplateGraph period;
  std::vector<LocalEdge> inter_period_edges;
  std::vector<CoreAttachment> core_attachments;
  std::optional<FanSpec> periodic_fan;

  friend bool operator==(const StripSpec&, const StripSpec&) = default;
};

/// Core vertex `core` is adjacent to local `local` of every period of `strip`.
struct Domination {
  std::string core;
  std::string strip;
  std::string local;  // empty: the strip's first template vertex

  friend bool operator==(const Domination&, const Domination&) = default;
};

/// Unvalidated graph description, as read from a spec file.
struct GraphSpec {
  TemplateGraph core;
  std::vector<StripSpec> strips;
  std::vector<FanSpec> fans;
  std::vector<Domination> dominations;
  /// Extra edges given as vertex tokens; folded into core edges and core
  /// attachments during validation. Anything else is rejected.
  std::vector<std::pair<std::string, std::string>> edges;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Infinite part of a neighbourhood.
struct NeighbourRule {
  enum class Kind : std::uint8_t {
    EveryPeriod,        // local `local` of every period of strip `owner`
    EveryCopy,          // local `local` of every copy of fan `owner`
    EveryPeriodicCopy,  // local `local` of every copy of the periodic fan at (owner, period)
  };
  Kind kind;
  std::string owner;
  std::uint64_t period = 0;
  std::string local;

  bool matches(const VertexId& v) const;

  friend auto operator<=>(const NeighbourRule&, const NeighbourRule&) = default;
  friend bool operator==(const NeighbourRule&, const NeighbourRule&) = default;
};

struct Neighbourhood {
  VertexSet finite;
  std::vector<NeighbourRule> rules;

  bool contains(const VertexId& v) const;
};

struct FiniteDegree {
  std::size_t value;
  friend bool operator==(const FiniteDegree&, const FiniteDegree&) = default;
};
struct InfiniteDegree {
  friend bool operator==(const InfiniteDegree&, const InfiniteDegree&) = default;
};
using DegreeClass = std::variant<FiniteDegree, InfiniteDegree>;

struct TruncationBounds {
  std::uint64_t periods = 0;  // strip periods t < periods
  std::uint64_t copies = 0;   // fan copies k < copies
};

/// Finite induced subgraph of a pattern graph.
struct FiniteGraph {
  std::vector<VertexId> vertices;                  // sorted
  std::vector<std::pair<VertexId, VertexId>> edges;  // sorted, first < second
  VertexSet boundary;  // vertices with a neighbour outside the truncation
};

/// A validated ω-pattern graph: finite core, strips, ω-fans and dominations.
/// Immutable; copies share the underlying data.
class PatternGraph {
 public:
  /// Checks every structural invariant; throws ValidationError listing all
  /// violations found.
  static PatternGraph validate(const GraphSpec& spec);

  /// The normalized spec (extra edges folded in, domination locals resolved).
  const GraphSpec& spec() const;

  bool contains(const VertexId& v) const;
  /// Throws Error(UnknownVertex) unless contains(v).
  void require(const VertexId& v) const;

  Neighbourhood neighbours(const VertexId& v) const;
  bool adjacent(const VertexId& u, const VertexId& v) const;

  const StripSpec* find_strip(const std::string& id) const;
  const FanSpec* find_fan(const std::string& id) const;

  bool has_fans() const;  // any core or periodic fan

  /// Attachment set of a core fan, as vertex ids.
  VertexSet fan_attachment(const FanSpec& fan) const;
  /// Attachment set of the periodic fan of `strip` at `period`.
  VertexSet periodic_attachment(const StripSpec& strip, std::uint64_t period) const;

  struct Data;

 private:
  explicit PatternGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

Neighbourhood neighbors(const PatternGraph& g, const VertexId& v);
DegreeClass degree_class(const PatternGraph& g, const VertexId& v);
FiniteGraph truncate(const PatternGraph& g, TruncationBounds bounds);

}  // namespace omegagraph
