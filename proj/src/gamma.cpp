#include "omegagraph/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "omegagraph/errors.hpp"

namespace omegagraph {

std::string FduPoint::token() const { return copy ? atom + "#" + std::to_string(*copy) : atom; }

bool SeqSelection::contains(std::uint64_t copy) const {
  return modulus != 0 && copy % modulus == residue && !excluded.count(copy);
}

namespace {

// Copy indices below `stable` may be irregular; past it membership repeats
// with period `period`.
struct Window {
  std::uint64_t stable = 0;
  std::uint64_t period = 1;
  std::uint64_t end(std::uint64_t periods = 2) const { return stable + periods * period; }
};

Window merge(Window a, Window b) { return {std::max(a.stable, b.stable), std::lcm(a.period, b.period)}; }

Window window_of(const FduSpace& s) { return {s.stable_copy(), s.period()}; }

Window window_of(const FduMap& m) {
  Window w = merge(window_of(m.source), window_of(m.target));
  for (const auto& [from, to] : m.table) {
    if (from.copy) w.stable = std::max(w.stable, *from.copy + 1);
    if (to.copy) w.stable = std::max(w.stable, *to.copy + 1);
  }
  return w;
}

std::vector<FduPoint> points_in_window(const FduSpace& s, Window w, std::uint64_t periods = 2) {
  std::vector<FduPoint> out = explicit_points(s);
  for (const auto& c : s.clusters) out.push_back(c.limit);
  for (const auto& f : s.families()) {
    for (std::uint64_t k = 0; k < w.end(periods); ++k) {
      FduPoint p = FduPoint::member(f, k);
      if (s.contains(p)) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool family_contains(const FduSpace& s, const std::string& family, std::uint64_t k) {
  for (const auto& c : s.clusters) {
    for (const auto& q : c.sequences) {
      if (q.family == family && q.contains(k)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<FduPoint> explicit_points(const FduSpace& space) {
  std::vector<FduPoint> out = space.isolated;
  for (const auto& c : space.clusters) out.insert(out.end(), c.members.begin(), c.members.end());
  return out;
}

void FduSpace::validate() const {
  std::set<FduPoint> seen;
  auto claim = [&](const FduPoint& p) {
    if (!seen.insert(p).second) throw Error(ErrorKind::InvalidEmbedding, "point " + p.token() + " listed twice");
  };
  for (const auto& p : explicit_points(*this)) claim(p);
  for (const auto& c : clusters) claim(c.limit);

  std::vector<const SeqSelection*> selections;
  for (const auto& c : clusters) {
    for (const auto& s : c.sequences) {
      if (s.modulus == 0 || s.residue >= s.modulus) {
        throw Error(ErrorKind::InvalidEmbedding, "bad residue class in sequence over " + s.family);
      }
      selections.push_back(&s);
    }
  }
  for (const auto& p : seen) {
    if (!p.copy) continue;
    for (const auto* s : selections) {
      if (s->family == p.atom && s->contains(*p.copy)) {
        throw Error(ErrorKind::InvalidEmbedding, "point " + p.token() + " also lies in a sequence");
      }
    }
  }
  for (std::size_t i = 0; i < selections.size(); ++i) {
    for (std::size_t j = i + 1; j < selections.size(); ++j) {
      const auto& a = *selections[i];
      const auto& b = *selections[j];
      if (a.family != b.family) continue;
      const auto g = std::gcd(a.modulus, b.modulus);
      if (a.residue % g == b.residue % g) {
        throw Error(ErrorKind::InvalidEmbedding, "two sequences over " + a.family + " overlap");
      }
    }
  }
}

bool FduSpace::contains(const FduPoint& p) const {
  for (const auto& q : isolated) {
    if (q == p) return true;
  }
  for (const auto& c : clusters) {
    if (c.limit == p) return true;
    if (std::find(c.members.begin(), c.members.end(), p) != c.members.end()) return true;
    if (!p.copy) continue;
    for (const auto& s : c.sequences) {
      if (s.family == p.atom && s.contains(*p.copy)) return true;
    }
  }
  return false;
}

bool FduSpace::is_limit(const FduPoint& p) const {
  return std::any_of(clusters.begin(), clusters.end(), [&](const Cluster& c) { return c.limit == p; });
}

std::optional<std::size_t> FduSpace::cluster_of(const FduPoint& p) const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& c = clusters[i];
    if (c.limit == p) return i;
    if (std::find(c.members.begin(), c.members.end(), p) != c.members.end()) return i;
    if (!p.copy) continue;
    for (const auto& s : c.sequences) {
      if (s.family == p.atom && s.contains(*p.copy)) return i;
    }
  }
  return std::nullopt;
}

std::uint64_t FduSpace::stable_copy() const {
  std::uint64_t out = 0;
  for (const auto& p : explicit_points(*this)) {
    if (p.copy) out = std::max(out, *p.copy + 1);
  }
  for (const auto& c : clusters) {
    for (const auto& s : c.sequences) {
      if (!s.excluded.empty()) out = std::max(out, *s.excluded.rbegin() + 1);
    }
  }
  return out;
}

std::uint64_t FduSpace::period() const {
  std::uint64_t out = 1;
  for (const auto& c : clusters) {
    for (const auto& s : c.sequences) out = std::lcm(out, std::max<std::uint64_t>(s.modulus, 1));
  }
  return out;
}

std::vector<FduPoint> FduSpace::sample_points(std::uint64_t extra_periods) const {
  return points_in_window(*this, window_of(*this), extra_periods);
}

std::set<std::string> FduSpace::families() const {
  std::set<std::string> out;
  for (const auto& c : clusters) {
    for (const auto& s : c.sequences) out.insert(s.family);
  }
  return out;
}

FduPoint FduMap::apply(const FduPoint& p) const {
  if (auto it = table.find(p); it != table.end()) return it->second;
  if (p.copy) {
    if (auto it = family_rules.find(p.atom); it != family_rules.end()) {
      if (it->second.kind == SeqRule::Kind::Constant) return it->second.constant;
      return FduPoint::member(it->second.target_family, *p.copy);
    }
  }
  throw Error(ErrorKind::InvalidMap, "no image for " + p.token());
}

void FduMap::validate() const {
  for (const auto& f : source.families()) {
    if (!family_rules.count(f)) throw Error(ErrorKind::InvalidMap, "no rule for family " + f);
  }
  for (const auto& p : points_in_window(source, window_of(*this))) {
    const auto q = apply(p);
    if (!target.contains(q)) throw Error(ErrorKind::InvalidMap, p.token() + " maps outside the target: " + q.token());
  }
}

ContinuityVerdict is_continuous(const FduMap& m) {
  const Window w = window_of(m);
  for (const auto& c : m.source.clusters) {
    const auto limit_image = m.apply(c.limit);
    const bool to_limit = m.target.is_limit(limit_image);
    const auto target_cluster = m.target.cluster_of(limit_image);
    for (const auto& s : c.sequences) {
      for (std::uint64_t k = w.stable; k < w.end(1); ++k) {
        if (!s.contains(k)) continue;
        const auto image = m.apply(FduPoint::member(s.family, k));
        bool ok = image == limit_image;
        if (!ok && to_limit && image.copy) ok = m.target.cluster_of(image) == target_cluster;
        if (!ok) {
          return {false, "cluster " + c.limit.token() + ": " + s.family + " copy " + std::to_string(k) + " maps to " +
                             image.token() + " but the limit maps to " + limit_image.token()};
        }
      }
    }
  }
  return {};
}

bool is_surjective(const FduMap& m) {
  const Window w = window_of(m);
  std::set<FduPoint> images;
  for (const auto& p : points_in_window(m.source, w)) images.insert(m.apply(p));
  for (const auto& q : points_in_window(m.target, w)) {
    if (!images.count(q)) return false;
  }
  return true;
}

bool fixes_points(const FduMap& m, const std::vector<FduPoint>& points) {
  return std::all_of(points.begin(), points.end(), [&](const FduPoint& p) { return m.apply(p) == p; });
}

namespace {

std::string family_atom(const FamilyHandle& h) { return "fam:" + h.token(); }

}  // namespace

FduPoint gamma_point(const ComponentSystem& cs, const ComponentRef& ref) {
  cs.require(ref);
  const auto& d = cs.at(ref.index);
  if (d.is_family()) return FduPoint::member(family_atom(d.family), *ref.copy);
  return FduPoint::named("comp:" + d.canonical());
}

FduPoint gamma_limit(const VertexSet& y) { return FduPoint::named("crit:" + to_token(y)); }

FduSpace gamma_space(const ComponentSystem& cs) {
  FduSpace out;
  for (auto i : cs.minus()) out.isolated.push_back(gamma_point(cs, {i, std::nullopt}));
  for (const auto& y : cs.critical()) {
    Cluster c;
    c.limit = gamma_limit(y);
    for (auto i : cs.family(y)) {
      const auto& d = cs.at(i);
      if (d.is_family()) c.sequences.push_back({family_atom(d.family), d.excluded, 1, 0});
      else c.members.push_back(gamma_point(cs, {i, std::nullopt}));
    }
    out.clusters.push_back(std::move(c));
  }
  return out;
}

FduMap bonding_f(const ComponentSystem& finer, const ComponentSystem& coarser) {
  if (!is_subset(coarser.deleted(), finer.deleted())) {
    throw Error(ErrorKind::NotNested, to_token(coarser.deleted()) + " is not a subset of " + to_token(finer.deleted()));
  }
  FduMap m{gamma_space(finer), gamma_space(coarser), {}, {}};
  for (std::size_t i = 0; i < finer.components().size(); ++i) {
    const auto& d = finer.at(i);
    if (!d.is_family()) {
      m.table[gamma_point(finer, {i, std::nullopt})] = gamma_point(coarser, bond(finer, {i, std::nullopt}, coarser));
      continue;
    }
    const auto image = bond_family(finer, i, coarser);
    m.family_rules[family_atom(d.family)] =
        image.identity ? SeqRule::identity(family_atom(coarser.at(image.target_family).family))
                       : SeqRule::to_point(gamma_point(coarser, image.constant));
  }
  for (const auto& y : finer.critical()) {
    m.table[gamma_limit(y)] =
        coarser.is_critical_here(y) ? gamma_limit(y) : gamma_point(coarser, unique_component_meeting(coarser, y));
  }
  return m;
}

FduPoint project(const PointOfGamma& xi, const ComponentSystem& cs) {
  xi.require(cs.graph());
  if (xi.kind == PointOfGamma::Kind::Crit && is_subset(xi.y, cs.deleted())) return gamma_limit(xi.y);
  return gamma_point(cs, filter_type(xi, cs).component);
}

InverseSystem build_inverse_system(SystemCache& cache, const std::vector<VertexSet>& family) {
  std::vector<VertexSet> sets = family;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto u = set_union(sets[i], sets[j]);
      const bool bounded =
          std::any_of(sets.begin(), sets.end(), [&](const VertexSet& z) { return is_subset(u, z); });
      if (!bounded) {
        throw Error(ErrorKind::NotDirected, to_token(sets[i]) + " and " + to_token(sets[j]) + " have no upper bound");
      }
    }
  }
  InverseSystem out;
  for (const auto& x : sets) out.stages.push_back(cache.get(x));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (is_subset(sets[j], sets[i])) out.maps.emplace(std::make_pair(i, j), bonding_f(*out.stages[i], *out.stages[j]));
    }
  }
  return out;
}

InverseSystemReport check_inverse_system(const InverseSystem& system) {
  InverseSystemReport report;
  auto name = [&](std::size_t i) { return to_token(system.stages[i]->deleted()); };

  for (const auto& [key, m] : system.maps) {
    ++report.continuity_checks;
    if (auto v = is_continuous(m); !v.continuous) {
      report.continuity_failures.push_back(name(key.first) + " -> " + name(key.second) + ": " + v.witness);
    }
  }

  for (const auto& [key, m] : system.maps) {
    const auto& finer = *system.stages[key.first];
    const auto& coarser = *system.stages[key.second];
    const Window w = window_of(m);
    for (std::size_t i = 0; i < finer.components().size(); ++i) {
      std::vector<ComponentRef> refs;
      const auto& d = finer.at(i);
      if (!d.is_family()) refs.push_back({i, std::nullopt});
      for (std::uint64_t k = 0; d.is_family() && k < w.end(); ++k) {
        if (!d.excluded.count(k)) refs.push_back({i, k});
      }
      for (const auto& r : refs) {
        ++report.condition1_checks;
        const auto via_gamma = m.apply(gamma_point(finer, r));
        const auto via_components = gamma_point(coarser, bond(finer, r, coarser));
        if (via_gamma != via_components) {
          report.condition1_failures.push_back(name(key.first) + " -> " + name(key.second) + ": " +
                                               gamma_point(finer, r).token() + " goes to " + via_gamma.token() +
                                               ", its component to " + via_components.token());
        }
      }
    }
  }

  for (const auto& [outer, direct] : system.maps) {
    const auto [k, i] = outer;
    for (std::size_t j = 0; j < system.stages.size(); ++j) {
      auto first = system.maps.find({k, j});
      auto second = system.maps.find({j, i});
      if (first == system.maps.end() || second == system.maps.end()) continue;
      const Window w = merge(window_of(direct), merge(window_of(first->second), window_of(second->second)));
      for (const auto& p : points_in_window(direct.source, w)) {
        ++report.functoriality_checks;
        const auto lhs = direct.apply(p);
        const auto rhs = second->second.apply(first->second.apply(p));
        if (lhs != rhs) {
          report.functoriality_failures.push_back(name(k) + " -> " + name(j) + " -> " + name(i) + ": " + p.token() +
                                                  " goes to " + lhs.token() + " directly, " + rhs.token() +
                                                  " through the middle");
        }
      }
    }
  }
  return report;
}

InverseSystemReport check_inverse_system(SystemCache& cache, const std::vector<VertexSet>& family) {
  return check_inverse_system(build_inverse_system(cache, family));
}

std::vector<LimitPoint> limit_points(SystemCache& cache, const std::vector<VertexSet>& family, std::uint64_t horizon) {
  const auto system = build_inverse_system(cache, family);
  std::vector<LimitPoint> out;
  for (auto& xi : gamma_points(cache.graph(), horizon)) {
    LimitPoint lp{std::move(xi), {}, true};
    for (const auto& cs : system.stages) lp.thread.push_back(project(lp.point, *cs));
    for (const auto& [key, m] : system.maps) {
      if (m.apply(lp.thread[key.first]) != lp.thread[key.second]) lp.compatible = false;
    }
    out.push_back(std::move(lp));
  }
  return out;
}

FduMap quotient_to_gamma(const FduSpace& gamma, const FduSpace& alpha) {
  gamma.validate();
  alpha.validate();
  auto sorted = [](std::vector<FduPoint> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(explicit_points(gamma)) != sorted(explicit_points(alpha))) {
    throw Error(ErrorKind::InvalidEmbedding, "isolated points differ from C_X");
  }
  if (gamma.families() != alpha.families()) throw Error(ErrorKind::InvalidEmbedding, "families differ from C_X");
  const Window w = merge(window_of(gamma), window_of(alpha));
  for (const auto& f : gamma.families()) {
    for (std::uint64_t k = 0; k < w.end(); ++k) {
      if (family_contains(gamma, f, k) != family_contains(alpha, f, k)) {
        throw Error(ErrorKind::InvalidEmbedding, "copy " + std::to_string(k) + " of " + f + " is not embedded");
      }
    }
  }

  FduMap m{alpha, gamma, {}, {}};
  for (const auto& p : explicit_points(alpha)) m.table[p] = p;
  for (const auto& f : alpha.families()) m.family_rules[f] = SeqRule::identity(f);
  for (const auto& c : alpha.clusters) {
    std::optional<std::size_t> target;
    for (const auto& s : c.sequences) {
      // the gamma cluster carrying this family
      std::optional<std::size_t> home;
      for (std::size_t i = 0; i < gamma.clusters.size() && !home; ++i) {
        for (const auto& q : gamma.clusters[i].sequences) {
          if (q.family == s.family) home = i;
        }
      }
      if (target && *target != *home) {
        throw Error(ErrorKind::Condition4Violated,
                    gamma.clusters[*target].limit.token() + " and " + gamma.clusters[*home].limit.token() +
                        " share the limit " + c.limit.token());
      }
      target = home;
    }
    if (!target) throw Error(ErrorKind::InvalidEmbedding, "limit " + c.limit.token() + " is not in the closure of C_X");
    m.table[c.limit] = gamma.clusters[*target].limit;
  }
  return m;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string describe(const SeqSelection& s) {
  std::string out = s.family + " (copies";
  if (s.modulus != 1) out += " k=" + std::to_string(s.residue) + " mod " + std::to_string(s.modulus);
  if (!s.excluded.empty()) {
    out += " except";
    for (auto k : s.excluded) out += " " + std::to_string(k);
  }
  return out + ")";
}

}  // namespace

std::string to_dot(const FduSpace& space, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (const auto& p : space.isolated) out << "  " << quoted(p.token()) << " [shape=box];\n";
  for (const auto& c : space.clusters) {
    out << "  " << quoted(c.limit.token()) << " [shape=doublecircle];\n";
    for (const auto& p : c.members) {
      out << "  " << quoted(p.token()) << " [shape=box];\n";
      out << "  " << quoted(p.token()) << " -- " << quoted(c.limit.token()) << " [style=dotted];\n";
    }
    for (const auto& s : c.sequences) {
      out << "  " << quoted(describe(s)) << " [shape=ellipse, style=dashed];\n";
      out << "  " << quoted(describe(s)) << " -- " << quoted(c.limit.token()) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace omegagraph
