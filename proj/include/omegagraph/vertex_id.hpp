#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace omegagraph {

enum class VertexKind : std::uint8_t { Core, Strip, Fan, PeriodicFan };

/// Symbolic vertex name.
///
///   Core         core:<name>
///   Strip        strip:<strip>/<period>/<local>
///   Fan          fan:<fan>/<copy>/<local>
///   PeriodicFan  pfan:<strip>/<period>/<copy>/<local>
///
/// Ordering is lexicographic on (kind, owner, period, copy, local), which is
/// the tie-breaking order used for canonical forms and witnesses.
struct VertexId {
  VertexKind kind = VertexKind::Core;
  std::string owner;  // strip or fan id; empty for core vertices
  std::uint64_t period = 0;
  std::uint64_t copy = 0;
  std::string local;  // core name for core vertices

  static VertexId core(std::string name);
  static VertexId strip(std::string strip_id, std::uint64_t period, std::string local);
  static VertexId fan(std::string fan_id, std::uint64_t copy, std::string local);
  static VertexId periodic_fan(std::string strip_id, std::uint64_t period, std::uint64_t copy,
                               std::string local);

  /// Parses the token grammar above; throws Error(ParseError).
  static VertexId parse(std::string_view token);

  std::string token() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

using VertexSet = std::set<VertexId>;

/// "{core:a,core:b}"
std::string to_token(const VertexSet& set);

/// Accepts "{t1,t2}", "t1,t2" or "{}" (whitespace ignored).
VertexSet parse_vertex_set(std::string_view text);

bool is_subset(const VertexSet& sub, const VertexSet& super);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

}  // namespace omegagraph
