#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegagraph/separations.hpp"

namespace omegagraph {

/// A point of Ω ⊔ crit(G): the end of a strip, or a critical vertex set.
struct PointOfGamma {
  enum class Kind : std::uint8_t { End, Crit };
  Kind kind = Kind::End;
  std::string strip;  // End
  VertexSet y;        // Crit

  static PointOfGamma end(std::string strip_id) { return {Kind::End, std::move(strip_id), {}}; }
  static PointOfGamma crit(VertexSet y) { return {Kind::Crit, {}, std::move(y)}; }

  /// "end:s1" or "crit:{strip:s1/0/p}"
  std::string token() const;
  /// Accepts the token() form; throws ParseError.
  static PointOfGamma parse(const std::string& text);
  /// Throws UnknownVertex / NotCritical if the point does not exist in g.
  void require(const PatternGraph& g) const;

  friend auto operator<=>(const PointOfGamma&, const PointOfGamma&) = default;
  friend bool operator==(const PointOfGamma&, const PointOfGamma&) = default;
};

/// Every end, plus Crit(Y) for the critical sets declared at periods ≤ horizon.
std::vector<PointOfGamma> gamma_points(const PatternGraph& g, std::uint64_t horizon);

/// Type of the filter a point induces on the tame subsets of C_X.
struct FilterType {
  enum class Kind : std::uint8_t { Principal, CofiniteOnFamily };
  Kind kind = Kind::Principal;
  ComponentRef component;  // Principal
  VertexSet y;             // CofiniteOnFamily

  /// Whether the filter contains the tame subset C.
  bool contains(const SymbolicSubset& c) const;
  friend bool operator==(const FilterType&, const FilterType&) = default;
};

FilterType filter_type(const PointOfGamma& xi, const ComponentSystem& cs);

/// Orients each separation toward the side in the point's filter.
/// Throws NotTame.
OrientedSeparation induced_orientation(const PointOfGamma& xi, const Separation& s);
Orientation induced_orientation(const PointOfGamma& xi, const std::vector<Separation>& seps);

struct TangleVerdict {
  enum class Kind : std::uint8_t { Ok, ConsistencyViolation, ForbiddenStar };
  Kind kind = Kind::Ok;
  std::pair<std::size_t, std::size_t> pair{};  // ConsistencyViolation
  std::vector<std::size_t> star;               // ForbiddenStar, minimal
  bool ok() const { return kind == Kind::Ok; }
};

/// Consistency, then a search for a star of finite interior. Stars are
/// cliques of the "point towards each other" relation and interiors shrink
/// on supersets, so only maximal cliques are tested; a hit is then shrunk
/// to an inclusion-minimal witness. Branches that cannot reach a finite
/// interior are cut. Exponential in the worst case.
/// Throws NotTame.
TangleVerdict check_tangle(const PatternGraph& g, const Orientation& o);

struct Distinction {
  Separation separation;
  OrientedSeparation first;   // as oriented by xi1
  OrientedSeparation second;  // as oriented by xi2
};

struct DistinguishOptions {
  /// Strip periods t < horizon are candidates; 0 picks 2 + max period mentioned.
  std::uint64_t horizon = 0;
  std::size_t max_size = 6;
};

/// Smallest X (by size, then lexicographically) carrying a tame separation
/// that xi1 and xi2 orient differently. Throws PointsEqual or
/// NotFoundWithinHorizon.
Distinction distinguish(const PatternGraph& g, const PointOfGamma& xi1, const PointOfGamma& xi2,
                        DistinguishOptions options = {});

/// Moves finitely many finite components across the separation, keeping X.
/// Throws NotFinite for an infinite component.
OrientedSeparation perturb(const OrientedSeparation& s, const std::vector<ComponentRef>& moved);

struct SampleOptions {
  std::size_t max_size = 2;
  std::uint64_t horizon = 3;  // strip periods t < horizon
  std::uint64_t copies = 1;   // fan copies k < copies
};

/// Candidate deletion vertices within the sampling window.
std::vector<VertexId> sample_pool(const PatternGraph& g, const SampleOptions& options);

/// Tame separations over every X ⊆ sample_pool with |X| ≤ max_size. Sides:
/// empty, each single component, each family C_X(Y) and C_X(Y) minus one copy.
/// Pairwise distinct.
std::vector<Separation> sample_tame_separations(SystemCache& cache, const SampleOptions& options);

}  // namespace omegagraph
