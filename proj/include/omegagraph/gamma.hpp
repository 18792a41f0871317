#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omegagraph/tangles.hpp"

namespace omegagraph {

/// A point of an FDU space: a named atom, or copy `copy` of the family
/// named by `atom`.
struct FduPoint {
  std::string atom;
  std::optional<std::uint64_t> copy;

  static FduPoint named(std::string atom) { return {std::move(atom), std::nullopt}; }
  static FduPoint member(std::string family, std::uint64_t copy) { return {std::move(family), copy}; }
  std::string token() const;

  friend auto operator<=>(const FduPoint&, const FduPoint&) = default;
  friend bool operator==(const FduPoint&, const FduPoint&) = default;
};

/// Copies k of `family` with k ≡ residue (mod modulus), minus `excluded`.
struct SeqSelection {
  std::string family;
  std::set<std::uint64_t> excluded;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;

  bool contains(std::uint64_t copy) const;
  friend bool operator==(const SeqSelection&, const SeqSelection&) = default;
};

/// Finitely many isolated points plus countable sequences, all converging to `limit`.
struct Cluster {
  std::vector<FduPoint> members;
  std::vector<SeqSelection> sequences;
  FduPoint limit;
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// A finite discrete set disjoint-unioned with finitely many convergent
/// sequences (each a one-point compactification of a countable discrete set).
struct FduSpace {
  std::vector<FduPoint> isolated;
  std::vector<Cluster> clusters;

  /// Throws InvalidEmbedding if two parts overlap.
  void validate() const;
  bool contains(const FduPoint& p) const;
  bool is_limit(const FduPoint& p) const;
  /// Index of the cluster holding p as member, sequence member or limit.
  std::optional<std::size_t> cluster_of(const FduPoint& p) const;
  /// Past this copy index every selection is purely periodic.
  std::uint64_t stable_copy() const;
  /// lcm of all moduli.
  std::uint64_t period() const;
  /// Explicit points, limits, and sequence copies below stable_copy() + extra periods.
  std::vector<FduPoint> sample_points(std::uint64_t extra_periods = 2) const;
  /// Names of all sequence families.
  std::set<std::string> families() const;

  friend bool operator==(const FduSpace&, const FduSpace&) = default;
};

/// How the copies of one source family map: all onto one point, or copy k
/// onto copy k of another family.
struct SeqRule {
  enum class Kind : std::uint8_t { Constant, Identity };
  Kind kind = Kind::Constant;
  FduPoint constant;
  std::string target_family;

  static SeqRule to_point(FduPoint p) { return {Kind::Constant, std::move(p), {}}; }
  static SeqRule identity(std::string target) { return {Kind::Identity, {}, std::move(target)}; }
  friend bool operator==(const SeqRule&, const SeqRule&) = default;
};

/// A map between FDU spaces: a finite table, then per-family rules.
struct FduMap {
  FduSpace source;
  FduSpace target;
  std::map<FduPoint, FduPoint> table;
  std::map<std::string, SeqRule> family_rules;

  /// Throws InvalidMap for a point the map does not cover.
  FduPoint apply(const FduPoint& p) const;
  /// Every source point has an image that is a target point; throws InvalidMap.
  void validate() const;
};

struct ContinuityVerdict {
  bool continuous = true;
  std::string witness;  // the offending cluster and sequence
};

/// For each source cluster with limit l: if f(l) is isolated the sequences
/// must be eventually constant at f(l); if f(l) is a limit they must end up
/// inside its target cluster (or constant at f(l)).
ContinuityVerdict is_continuous(const FduMap& m);
bool is_surjective(const FduMap& m);
/// f(p) = p for every listed point.
bool fixes_points(const FduMap& m, const std::vector<FduPoint>& points);

/// Γ_X point of a component of G - X.
FduPoint gamma_point(const ComponentSystem& cs, const ComponentRef& ref);
/// Γ_X point of a critical Y ⊆ X.
FduPoint gamma_limit(const VertexSet& y);

/// Γ_X = C_X ⊔ crit(X): C_X^- isolated, one cluster per critical Y.
FduSpace gamma_space(const ComponentSystem& cs);

/// f_{X',X}: Γ_{X'} → Γ_X. Throws NotNested.
FduMap bonding_f(const ComponentSystem& finer, const ComponentSystem& coarser);

/// The point of Γ_X a point of Ω ⊔ crit(G) projects to.
FduPoint project(const PointOfGamma& xi, const ComponentSystem& cs);

/// Stages of an inverse system with the bonding map for every nested pair.
struct InverseSystem {
  std::vector<SystemPtr> stages;
  std::map<std::pair<std::size_t, std::size_t>, FduMap> maps;  // (finer, coarser)
};

/// Throws NotDirected unless every pair has an upper bound in the family.
InverseSystem build_inverse_system(SystemCache& cache, const std::vector<VertexSet>& family);

struct InverseSystemReport {
  std::size_t functoriality_checks = 0;
  std::size_t condition1_checks = 0;
  std::size_t continuity_checks = 0;
  std::vector<std::string> functoriality_failures;
  std::vector<std::string> condition1_failures;
  std::vector<std::string> continuity_failures;
  bool ok() const {
    return functoriality_failures.empty() && condition1_failures.empty() && continuity_failures.empty();
  }
};

InverseSystemReport check_inverse_system(const InverseSystem& system);
InverseSystemReport check_inverse_system(SystemCache& cache, const std::vector<VertexSet>& family);

struct LimitPoint {
  PointOfGamma point;
  std::vector<FduPoint> thread;  // one per stage
  bool compatible = true;        // bonding maps carry thread[X'] to thread[X]
};

/// Every end and every critical set declared at periods ≤ horizon, with its
/// thread through the stages. Throws NotDirected.
std::vector<LimitPoint> limit_points(SystemCache& cache, const std::vector<VertexSet>& family, std::uint64_t horizon);

/// The continuous surjection alpha → gamma collapsing each alpha cluster onto
/// the critical limit whose family it carries. alpha must contain exactly the
/// non-limit points of gamma (same names). Throws InvalidEmbedding or
/// Condition4Violated.
FduMap quotient_to_gamma(const FduSpace& gamma, const FduSpace& alpha);

/// Non-limit points of gamma that are named explicitly (not sequence copies).
std::vector<FduPoint> explicit_points(const FduSpace& space);

/// Graphviz rendering: sequences drawn as one node with an edge to the limit.
std::string to_dot(const FduSpace& space, const std::string& name = "gamma");

}  // namespace omegagraph
