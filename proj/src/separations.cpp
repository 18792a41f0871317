#include "omegagraph/separations.hpp"

#include "omegagraph/errors.hpp"

namespace omegagraph {

SystemPtr SystemCache::get(const VertexSet& x) {
  auto it = systems_.find(x);
  if (it != systems_.end()) return it->second;
  auto cs = remove_vertices(graph_, x);
  systems_.emplace(x, cs);
  return cs;
}

OrientedSeparation Separation::toward_side() const { return {side}; }

OrientedSeparation Separation::away_from_side() const { return {side.complement()}; }

bool Separation::same_as(const Separation& other) const {
  if (base() != other.base()) return false;
  return side == other.side || side == other.side.complement();
}

std::string Separation::describe() const { return "{" + to_token(base()) + " | " + side.describe() + "}"; }

VertexRegion OrientedSeparation::small_side() const { return {base(), toward.complement()}; }

VertexRegion OrientedSeparation::big_side() const { return {base(), toward}; }

std::string OrientedSeparation::describe() const { return to_token(base()) + " -> " + toward.describe(); }

Orientation::Orientation(std::vector<OrientedSeparation> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i].separation().same_as(members_[j].separation())) {
        throw Error(ErrorKind::DuplicateSeparation, members_[i].separation().describe());
      }
    }
  }
}

bool le(const OrientedSeparation& s1, const OrientedSeparation& s2) {
  const auto z = set_union(s1.base(), s2.base());
  SystemPtr cs;
  if (z == s1.base()) cs = s1.toward.system_ptr();
  else if (z == s2.base()) cs = s2.toward.system_ptr();
  else cs = remove_vertices(s1.toward.system().graph(), z);
  return lift(s1.small_side(), cs).subset_of(lift(s2.small_side(), cs)) &&
         lift(s2.big_side(), cs).subset_of(lift(s1.big_side(), cs));
}

LiftedOrientation::LiftedOrientation(const PatternGraph& g, const Orientation& o) {
  VertexSet z;
  for (const auto& s : o.members()) z.insert(s.base().begin(), s.base().end());
  for (const auto& s : o.members()) {
    if (s.base() == z) {
      cs_ = s.toward.system_ptr();
      break;
    }
  }
  if (!cs_) cs_ = remove_vertices(g, z);
  for (const auto& s : o.members()) {
    small_.push_back(lift(s.small_side(), cs_));
    big_.push_back(lift(s.big_side(), cs_));
  }
}

bool LiftedOrientation::le(std::size_t i, std::size_t j) const {
  return small_[i].subset_of(small_[j]) && big_[j].subset_of(big_[i]);
}

bool LiftedOrientation::toward_each_other(std::size_t i, std::size_t j) const {
  return small_[i].subset_of(big_[j]) && small_[j].subset_of(big_[i]);
}

bool LiftedOrientation::points_away(std::size_t i, std::size_t j) const {
  if (!(big_[i].subset_of(small_[j]) && big_[j].subset_of(small_[i]))) return false;
  return !(big_[i] == small_[j] && small_[i] == big_[j]);
}

VertexRegion LiftedOrientation::interior(const std::vector<std::size_t>& members) const {
  VertexRegion out{cs_->deleted(), SymbolicSubset::all(cs_)};
  for (auto i : members) out = out.intersect(big_[i]);
  return out;
}

bool is_star(const Orientation& sigma) {
  if (sigma.size() < 2) return true;
  const LiftedOrientation lifted(sigma[0].toward.system().graph(), sigma);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (!lifted.toward_each_other(i, j)) return false;
    }
  }
  return true;
}

Interior interior(const PatternGraph& g, const Orientation& sigma) {
  if (!is_star(sigma)) throw Error(ErrorKind::NotAStar, "orientation of size " + std::to_string(sigma.size()));
  const LiftedOrientation lifted(g, sigma);
  std::vector<std::size_t> all(sigma.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Interior out{lifted.interior(all), false};
  out.finite = out.region.is_finite();
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> consistency_violation(const Orientation& o) {
  if (o.size() < 2) return std::nullopt;
  const LiftedOrientation lifted(o[0].toward.system().graph(), o);
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = 0; j < o.size(); ++j) {
      if (i != j && lifted.points_away(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace omegagraph
