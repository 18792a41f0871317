#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "omegagraph/pattern_graph.hpp"

namespace omegagraph {

/// Names an ω-indexed family of fan copies: the copies of a core fan, or the
/// copies of a strip's periodic fan at one period.
struct FamilyHandle {
  enum class Kind : std::uint8_t { CoreFan, PeriodicFan };
  Kind kind = Kind::CoreFan;
  std::string owner;  // fan id or strip id
  std::uint64_t period = 0;

  static FamilyHandle core_fan(std::string fan_id);
  static FamilyHandle periodic(std::string strip_id, std::uint64_t period);

  /// "fan:f1" or "pfan:s1/3"
  std::string token() const;
  VertexId member(std::uint64_t copy, const std::string& local) const;
  /// The family a fan vertex belongs to; nullopt for core/strip vertices.
  static std::optional<FamilyHandle> of(const VertexId& v);

  friend auto operator<=>(const FamilyHandle&, const FamilyHandle&) = default;
  friend bool operator==(const FamilyHandle&, const FamilyHandle&) = default;
};

/// "strip s from period t onward", including the periodic-fan copies hanging
/// off those periods.
struct TailSegment {
  std::string strip;
  std::uint64_t from_period = 0;

  friend auto operator<=>(const TailSegment&, const TailSegment&) = default;
  friend bool operator==(const TailSegment&, const TailSegment&) = default;
};

/// Every copy of `family` except the `excluded` ones.
struct AbsorbedFamily {
  FamilyHandle family;
  std::set<std::uint64_t> excluded;

  friend auto operator<=>(const AbsorbedFamily&, const AbsorbedFamily&) = default;
  friend bool operator==(const AbsorbedFamily&, const AbsorbedFamily&) = default;
};

enum class ComponentKind : std::uint8_t { Finite, Family, Big };

/// One component of G - X, or (kind == Family) an infinite family of
/// isomorphic single-copy components sharing one neighbourhood.
struct ComponentDescriptor {
  ComponentKind kind = ComponentKind::Finite;
  std::vector<VertexId> vertices;  // explicit part, sorted (Finite, Big)
  std::vector<TailSegment> tails;  // Big
  std::vector<AbsorbedFamily> absorbed;  // Big
  FamilyHandle family;  // Family
  std::set<std::uint64_t> excluded;  // Family: copies meeting X
  VertexSet neighbourhood;  // N(C), exact

  bool is_family() const { return kind == ComponentKind::Family; }
  bool is_infinite() const { return kind != ComponentKind::Finite; }
  /// Canonical text form; equal descriptors have equal strings.
  std::string canonical() const;
};

/// An element of C_X: a descriptor index plus, for families, the copy index.
struct ComponentRef {
  std::size_t index = 0;
  std::optional<std::uint64_t> copy;

  friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

/// Past these indices the pattern is untouched by X.
struct StabilizationBound {
  std::uint64_t periods = 0;
  std::uint64_t copies = 0;
};

/// Exact symbolic decomposition of G - X for a finite vertex set X.
class ComponentSystem {
 public:
  ComponentSystem(PatternGraph graph, VertexSet deleted);

  const PatternGraph& graph() const { return graph_; }
  const VertexSet& deleted() const { return deleted_; }
  std::span<const ComponentDescriptor> components() const { return components_; }
  const ComponentDescriptor& at(std::size_t index) const;
  StabilizationBound bound() const { return bound_; }

  /// Descriptor indices whose members have neighbourhood exactly Y (C_X(Y)).
  /// Throws NotASubset unless Y ⊆ X.
  std::vector<std::size_t> family(const VertexSet& y) const;
  /// {Y ⊆ X : C_X(Y) infinite}, sorted.
  const std::vector<VertexSet>& critical() const { return critical_; }
  bool is_critical_here(const VertexSet& y) const;
  /// C_X^-: explicit components whose neighbourhood is not critical.
  const std::vector<std::size_t>& minus() const { return minus_; }

  /// The component containing v (v ∉ X).
  ComponentRef locate(const VertexId& v) const;
  bool contains(const ComponentRef& ref, const VertexId& v) const;
  /// A fixed vertex of the referenced component.
  VertexId representative(const ComponentRef& ref) const;
  /// Checks that ref names an existing component; throws UnknownComponent.
  void require(const ComponentRef& ref) const;
  /// First period of `strip` untouched by X; everything from here on lies in
  /// the component containing the strip's tail.
  std::uint64_t tail_start(const std::string& strip) const;
  /// Vertices of the component inside truncate(g, bounds).
  std::vector<VertexId> materialize(const ComponentRef& ref, TruncationBounds bounds) const;
  /// Descriptor index of the standalone family with this handle, if any.
  std::optional<std::size_t> family_index(const FamilyHandle& handle) const;

 private:
  struct Node {
    enum class Kind : std::uint8_t { Vertex, Tail, Family };
    Kind kind;
    VertexId vertex;
    std::string strip;
    FamilyHandle family;
  };

  void build();
  std::size_t node_of(const VertexId& v) const;

  PatternGraph graph_;
  VertexSet deleted_;
  StabilizationBound bound_;
  std::map<std::string, std::uint64_t> tail_start_;
  std::map<FamilyHandle, std::set<std::uint64_t>> hit_copies_;

  std::vector<Node> nodes_;
  std::map<VertexId, std::size_t> vertex_nodes_;
  std::map<std::string, std::size_t> tail_nodes_;
  std::map<FamilyHandle, std::size_t> family_nodes_;
  std::vector<std::size_t> node_component_;

  std::vector<ComponentDescriptor> components_;
  std::vector<VertexSet> critical_;
  std::vector<std::size_t> minus_;
};

using SystemPtr = std::shared_ptr<const ComponentSystem>;

/// delete(g, X): the component system of G - X. Throws UnknownVertex.
SystemPtr remove_vertices(const PatternGraph& g, const VertexSet& x);

/// bonding map c_{X',X}: the component of G - X including `component` of G - X'.
ComponentRef bond(const ComponentSystem& finer, const ComponentRef& component,
                  const ComponentSystem& coarser);

/// How a whole family of G - X' lands in G - X: copy-for-copy onto a family
/// of G - X, or all copies into one component.
struct FamilyImage {
  bool identity = false;
  std::size_t target_family = 0;  // identity
  ComponentRef constant;          // !identity
};
FamilyImage bond_family(const ComponentSystem& finer, std::size_t family_index,
                        const ComponentSystem& coarser);

/// Y ∈ crit(G)?
bool is_critical(const PatternGraph& g, const VertexSet& y);

/// C_X(Y) for Y critical with Y ⊄ X: the unique component of G - X meeting Y.
/// Throws NotCritical or YContainedInX.
ComponentRef unique_component_meeting(const ComponentSystem& cs, const VertexSet& y);

/// Critical sets declared by fans: every core fan attachment set, and the
/// attachment set of each periodic fan at periods t < periods. Only sets with
/// at most max_size elements are returned. Sorted.
std::vector<VertexSet> declared_critical_sets(const PatternGraph& g, std::size_t max_size,
                                              std::uint64_t periods);

}  // namespace omegagraph
