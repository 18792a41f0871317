#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "omegagraph/component_system.hpp"

namespace omegagraph {

/// Membership rule for the copies of one infinite family:
/// copy k is in iff base(k) xor (k in flips).
struct CopyRule {
  enum class Base : std::uint8_t { None, All, Even, Odd };
  Base base = Base::None;
  std::set<std::uint64_t> flips;

  static CopyRule none() { return {}; }
  static CopyRule all() { return {Base::All, {}}; }
  /// AllButFinitely(in, exceptions) / AllButFinitely(out, exceptions)
  static CopyRule all_but(std::set<std::uint64_t> exceptions) { return {Base::All, std::move(exceptions)}; }
  static CopyRule only(std::set<std::uint64_t> copies) { return {Base::None, std::move(copies)}; }
  static CopyRule parity(bool even) { return {even ? Base::Even : Base::Odd, {}}; }

  bool contains(std::uint64_t copy) const;
  bool infinitely_many_in() const { return base != Base::None; }
  bool infinitely_many_out() const { return base != Base::All; }

  friend auto operator<=>(const CopyRule&, const CopyRule&) = default;
  friend bool operator==(const CopyRule&, const CopyRule&) = default;
};

/// A subset C of C_X: one bit per explicit component plus a CopyRule per
/// infinite family. Values are normalized, so == is set equality.
class SymbolicSubset {
 public:
  SymbolicSubset() = default;

  static SymbolicSubset none(SystemPtr cs);
  static SymbolicSubset all(SystemPtr cs);
  static SymbolicSubset of(SystemPtr cs, const std::vector<ComponentRef>& members);
  /// Every member of C_X(Y).
  static SymbolicSubset family_of(SystemPtr cs, const VertexSet& y);

  const ComponentSystem& system() const { return *cs_; }
  const SystemPtr& system_ptr() const { return cs_; }
  const VertexSet& base() const { return cs_->deleted(); }

  bool contains(const ComponentRef& ref) const;
  void assign(const ComponentRef& ref, bool member);
  /// Throws InvariantFailure if `family` is not a family descriptor.
  void set_rule(std::size_t family, CopyRule rule);
  const CopyRule& rule(std::size_t family) const;
  bool includes(std::size_t explicit_component) const;

  SymbolicSubset complement() const;
  /// Both throw BaseMismatch unless the bases agree.
  SymbolicSubset intersect(const SymbolicSubset& other) const;
  SymbolicSubset unite(const SymbolicSubset& other) const;
  bool subset_of(const SymbolicSubset& other) const;

  bool empty() const;
  /// Finitely many members.
  bool is_finite() const;
  /// V[C] is finite: finitely many members, none of them infinite.
  bool spans_finite_vertex_set() const;
  bool is_cofinite_in_family(std::size_t family) const;
  /// C ∩ C_X(Y) is infinite.
  bool meets_infinitely(const VertexSet& y) const;
  /// No critical family split into two infinite halves.
  bool is_tame() const;

  std::string describe() const;

  friend bool operator==(const SymbolicSubset& a, const SymbolicSubset& b);

 private:
  struct Entry {
    bool in = false;  // explicit components
    CopyRule rule;    // families
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit SymbolicSubset(SystemPtr cs);
  void normalize(std::size_t index);
  void require_same_base(const SymbolicSubset& other) const;

  SystemPtr cs_;
  std::vector<Entry> entries_;
};

/// The vertex set D ∪ V[C] for D ⊆ Z and C ⊆ C_Z, where Z is the base.
struct VertexRegion {
  VertexSet deleted_part;
  SymbolicSubset components;

  const VertexSet& base() const { return components.base(); }
  bool contains(const VertexId& v) const;
  bool subset_of(const VertexRegion& other) const;
  VertexRegion intersect(const VertexRegion& other) const;
  bool is_finite() const { return components.spans_finite_vertex_set(); }
  friend bool operator==(const VertexRegion&, const VertexRegion&) = default;
};

/// The same vertex set expressed over a larger base. Throws NotNested unless
/// the region's base is a subset of target's.
VertexRegion lift(const VertexRegion& region, const SystemPtr& target);

}  // namespace omegagraph
