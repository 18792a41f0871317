#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegagraph/symbolic_subset.hpp"

namespace omegagraph {

/// Memoized delete(g, X) for one graph.
class SystemCache {
 public:
  explicit SystemCache(PatternGraph graph) : graph_(std::move(graph)) {}
  const PatternGraph& graph() const { return graph_; }
  SystemPtr get(const VertexSet& x);

 private:
  PatternGraph graph_;
  std::map<VertexSet, SystemPtr> systems_;
};

struct OrientedSeparation;

/// The separation {X ∪ V[C], X ∪ V[C_X ∖ C]}.
struct Separation {
  SymbolicSubset side;

  const VertexSet& base() const { return side.base(); }
  /// s_{X→C}
  OrientedSeparation toward_side() const;
  /// s_{C→X}
  OrientedSeparation away_from_side() const;
  /// Same unordered pair of vertex sets.
  bool same_as(const Separation& other) const;
  bool is_tame() const { return side.is_tame(); }
  std::string describe() const;
};

/// s_{X→C} = (V ∖ V[C], X ∪ V[C]): small side first, pointing to `toward`.
struct OrientedSeparation {
  SymbolicSubset toward;

  const VertexSet& base() const { return toward.base(); }
  VertexRegion small_side() const;
  VertexRegion big_side() const;
  OrientedSeparation flip() const { return {toward.complement()}; }
  Separation separation() const { return {toward}; }
  std::string describe() const;
  friend bool operator==(const OrientedSeparation&, const OrientedSeparation&) = default;
};

/// A finite set of oriented separations, at most one per separation.
class Orientation {
 public:
  Orientation() = default;
  /// Throws DuplicateSeparation if some separation appears twice.
  explicit Orientation(std::vector<OrientedSeparation> members);

  const std::vector<OrientedSeparation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const OrientedSeparation& operator[](std::size_t i) const { return members_[i]; }

 private:
  std::vector<OrientedSeparation> members_;
};

/// (A, B) ≤ (C, D) iff A ⊆ C and B ⊇ D.
bool le(const OrientedSeparation& s1, const OrientedSeparation& s2);
bool is_star(const Orientation& sigma);

struct Interior {
  VertexRegion region;
  bool finite = false;
};
/// Intersection of the big sides. Throws NotAStar. The empty star needs the
/// graph, so it is passed explicitly.
Interior interior(const PatternGraph& g, const Orientation& sigma);

/// A pair (i, j) with flip(o[i]) < o[j], if any.
std::optional<std::pair<std::size_t, std::size_t>> consistency_violation(const Orientation& o);
inline bool is_consistent(const Orientation& o) { return !consistency_violation(o); }

inline bool is_tame(const Separation& s) { return s.is_tame(); }

/// Every member lifted to one common base, for repeated pairwise checks.
class LiftedOrientation {
 public:
  LiftedOrientation(const PatternGraph& g, const Orientation& o);

  const SystemPtr& system() const { return cs_; }
  std::size_t size() const { return small_.size(); }
  bool le(std::size_t i, std::size_t j) const;
  /// o[i] ≤ flip(o[j]): the two point towards each other.
  bool toward_each_other(std::size_t i, std::size_t j) const;
  /// flip(o[i]) < o[j]
  bool points_away(std::size_t i, std::size_t j) const;
  /// Intersection of the big sides of the chosen members.
  VertexRegion interior(const std::vector<std::size_t>& members) const;
  const VertexRegion& small_side(std::size_t i) const { return small_[i]; }
  const VertexRegion& big_side(std::size_t i) const { return big_[i]; }

 private:
  SystemPtr cs_;
  std::vector<VertexRegion> small_;
  std::vector<VertexRegion> big_;
};

}  // namespace omegagraph
