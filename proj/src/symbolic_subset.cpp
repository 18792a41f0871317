#include "omegagraph/symbolic_subset.hpp"

#include <algorithm>

#include "omegagraph/errors.hpp"

namespace omegagraph {

namespace {

using Base = CopyRule::Base;

bool base_contains(Base b, std::uint64_t k) {
  switch (b) {
    case Base::None: return false;
    case Base::All: return true;
    case Base::Even: return k % 2 == 0;
    case Base::Odd: return k % 2 == 1;
  }
  return false;
}

Base negate(Base b) {
  switch (b) {
    case Base::None: return Base::All;
    case Base::All: return Base::None;
    case Base::Even: return Base::Odd;
    case Base::Odd: return Base::Even;
  }
  return Base::None;
}

Base meet(Base a, Base b) {
  if (a == Base::None || b == Base::None) return Base::None;
  if (a == Base::All) return b;
  if (b == Base::All) return a;
  return a == b ? a : Base::None;
}

Base join(Base a, Base b) { return negate(meet(negate(a), negate(b))); }

template <class Op>
CopyRule combine(const CopyRule& a, const CopyRule& b, Base base, Op op) {
  CopyRule out{base, {}};
  std::set<std::uint64_t> touched = a.flips;
  touched.insert(b.flips.begin(), b.flips.end());
  for (auto k : touched) {
    if (op(a.contains(k), b.contains(k)) != base_contains(base, k)) out.flips.insert(k);
  }
  return out;
}

std::string base_name(Base b) {
  switch (b) {
    case Base::None: return "none";
    case Base::All: return "all";
    case Base::Even: return "even";
    case Base::Odd: return "odd";
  }
  return "?";
}

}  // namespace

bool CopyRule::contains(std::uint64_t copy) const { return base_contains(base, copy) != (flips.count(copy) > 0); }

SymbolicSubset::SymbolicSubset(SystemPtr cs) : cs_(std::move(cs)), entries_(cs_->components().size()) {}

SymbolicSubset SymbolicSubset::none(SystemPtr cs) { return SymbolicSubset(std::move(cs)); }

SymbolicSubset SymbolicSubset::all(SystemPtr cs) { return none(std::move(cs)).complement(); }

SymbolicSubset SymbolicSubset::of(SystemPtr cs, const std::vector<ComponentRef>& members) {
  SymbolicSubset out(std::move(cs));
  for (const auto& r : members) out.assign(r, true);
  return out;
}

SymbolicSubset SymbolicSubset::family_of(SystemPtr cs, const VertexSet& y) {
  SymbolicSubset out(cs);
  for (auto i : cs->family(y)) {
    if (cs->at(i).is_family()) out.set_rule(i, CopyRule::all());
    else out.entries_[i].in = true;
  }
  return out;
}

bool SymbolicSubset::contains(const ComponentRef& ref) const {
  cs_->require(ref);
  const auto& e = entries_[ref.index];
  return ref.copy ? e.rule.contains(*ref.copy) : e.in;
}

void SymbolicSubset::assign(const ComponentRef& ref, bool member) {
  cs_->require(ref);
  auto& e = entries_[ref.index];
  if (!ref.copy) {
    e.in = member;
    return;
  }
  if (e.rule.contains(*ref.copy) != member) {
    if (!e.rule.flips.erase(*ref.copy)) e.rule.flips.insert(*ref.copy);
  }
}

void SymbolicSubset::set_rule(std::size_t family, CopyRule rule) {
  if (family >= entries_.size() || !cs_->at(family).is_family()) {
    throw Error(ErrorKind::InvariantFailure, "descriptor " + std::to_string(family) + " is not a family");
  }
  entries_[family].rule = std::move(rule);
  normalize(family);
}

const CopyRule& SymbolicSubset::rule(std::size_t family) const { return entries_.at(family).rule; }

bool SymbolicSubset::includes(std::size_t explicit_component) const { return entries_.at(explicit_component).in; }

void SymbolicSubset::normalize(std::size_t index) {
  for (auto k : cs_->at(index).excluded) entries_[index].rule.flips.erase(k);
}

void SymbolicSubset::require_same_base(const SymbolicSubset& other) const {
  if (base() != other.base()) {
    throw Error(ErrorKind::BaseMismatch, to_token(base()) + " vs " + to_token(other.base()));
  }
}

SymbolicSubset SymbolicSubset::complement() const {
  SymbolicSubset out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = out.entries_[i];
    if (cs_->at(i).is_family()) e.rule.base = negate(e.rule.base);
    else e.in = !e.in;
  }
  return out;
}

SymbolicSubset SymbolicSubset::intersect(const SymbolicSubset& other) const {
  require_same_base(other);
  SymbolicSubset out(cs_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other.entries_[i];
    out.entries_[i].in = a.in && b.in;
    out.entries_[i].rule = combine(a.rule, b.rule, meet(a.rule.base, b.rule.base), std::logical_and<>());
  }
  return out;
}

SymbolicSubset SymbolicSubset::unite(const SymbolicSubset& other) const {
  require_same_base(other);
  SymbolicSubset out(cs_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other.entries_[i];
    out.entries_[i].in = a.in || b.in;
    out.entries_[i].rule = combine(a.rule, b.rule, join(a.rule.base, b.rule.base), std::logical_or<>());
  }
  return out;
}

bool SymbolicSubset::subset_of(const SymbolicSubset& other) const { return intersect(other.complement()).empty(); }

bool SymbolicSubset::empty() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) {
    return !e.in && e.rule.base == Base::None && e.rule.flips.empty();
  });
}

bool SymbolicSubset::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.rule.base == Base::None; });
}

bool SymbolicSubset::spans_finite_vertex_set() const {
  if (!is_finite()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].in && cs_->at(i).kind == ComponentKind::Big) return false;
  }
  return true;
}

bool SymbolicSubset::is_cofinite_in_family(std::size_t family) const { return rule(family).base == Base::All; }

bool SymbolicSubset::meets_infinitely(const VertexSet& y) const {
  for (auto i : cs_->family(y)) {
    if (cs_->at(i).is_family() && entries_[i].rule.infinitely_many_in()) return true;
  }
  return false;
}

bool SymbolicSubset::is_tame() const {
  for (const auto& y : cs_->critical()) {
    bool in = false;
    bool out = false;
    for (auto i : cs_->family(y)) {
      if (!cs_->at(i).is_family()) continue;
      in = in || entries_[i].rule.infinitely_many_in();
      out = out || entries_[i].rule.infinitely_many_out();
    }
    if (in && out) return false;
  }
  return true;
}

std::string SymbolicSubset::describe() const {
  std::string out = "{";
  bool first = true;
  auto add = [&](const std::string& s) {
    if (!first) out += ", ";
    first = false;
    out += s;
  };
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& d = cs_->at(i);
    const auto& e = entries_[i];
    if (!d.is_family()) {
      if (e.in) add(d.canonical());
      continue;
    }
    if (e.rule.base == Base::None && e.rule.flips.empty()) continue;
    std::string s = d.family.token() + " " + base_name(e.rule.base);
    if (!e.rule.flips.empty()) {
      s += " flip{";
      bool f = true;
      for (auto k : e.rule.flips) {
        s += (f ? "" : ",") + std::to_string(k);
        f = false;
      }
      s += "}";
    }
    add(s);
  }
  return out + "}";
}

bool operator==(const SymbolicSubset& a, const SymbolicSubset& b) {
  if (!a.cs_ || !b.cs_) return a.cs_ == b.cs_;
  return a.base() == b.base() && a.entries_ == b.entries_;
}

bool VertexRegion::contains(const VertexId& v) const {
  if (base().count(v)) return deleted_part.count(v) > 0;
  return components.contains(components.system().locate(v));
}

bool VertexRegion::subset_of(const VertexRegion& other) const {
  return is_subset(deleted_part, other.deleted_part) && components.subset_of(other.components);
}

VertexRegion VertexRegion::intersect(const VertexRegion& other) const {
  VertexSet d;
  std::set_intersection(deleted_part.begin(), deleted_part.end(), other.deleted_part.begin(),
                        other.deleted_part.end(), std::inserter(d, d.end()));
  return {std::move(d), components.intersect(other.components)};
}

VertexRegion lift(const VertexRegion& region, const SystemPtr& target) {
  const auto& source = region.components.system();
  if (!is_subset(source.deleted(), target->deleted())) {
    throw Error(ErrorKind::NotNested, to_token(source.deleted()) + " is not a subset of " + to_token(target->deleted()));
  }
  if (source.deleted() == target->deleted()) return region;
  VertexRegion out{{}, SymbolicSubset::none(target)};
  for (const auto& z : target->deleted()) {
    if (region.contains(z)) out.deleted_part.insert(z);
  }
  for (std::size_t i = 0; i < target->components().size(); ++i) {
    const auto& d = target->at(i);
    if (!d.is_family()) {
      out.components.assign({i, std::nullopt}, region.components.contains(bond(*target, {i, std::nullopt}, source)));
      continue;
    }
    const auto image = bond_family(*target, i, source);
    if (image.identity) {
      out.components.set_rule(i, region.components.rule(image.target_family));
    } else {
      out.components.set_rule(i, region.components.contains(image.constant) ? CopyRule::all() : CopyRule::none());
    }
  }
  return out;
}

}  // namespace omegagraph
