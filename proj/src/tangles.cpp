#include "omegagraph/tangles.hpp"

#include <algorithm>
#include <functional>

#include "omegagraph/errors.hpp"

namespace omegagraph {

std::string PointOfGamma::token() const {
  if (kind == Kind::End) return "end:" + strip;
  return "crit:" + to_token(y);
}

PointOfGamma PointOfGamma::parse(const std::string& text) {
  if (text.rfind("end:", 0) == 0 && text.size() > 4) return end(text.substr(4));
  if (text.rfind("crit:", 0) == 0) return crit(parse_vertex_set(text.substr(5)));
  throw Error(ErrorKind::ParseError, "expected end:<strip> or crit:{...}, got '" + text + "'");
}

void PointOfGamma::require(const PatternGraph& g) const {
  if (kind == Kind::End) {
    if (!g.find_strip(strip)) throw Error(ErrorKind::UnknownVertex, "no strip '" + strip + "'");
    return;
  }
  for (const auto& v : y) g.require(v);
  if (!is_critical(g, y)) throw Error(ErrorKind::NotCritical, to_token(y));
}

std::vector<PointOfGamma> gamma_points(const PatternGraph& g, std::uint64_t horizon) {
  std::vector<PointOfGamma> out;
  for (const auto& s : g.spec().strips) out.push_back(PointOfGamma::end(s.id));
  for (auto& y : declared_critical_sets(g, static_cast<std::size_t>(-1), horizon + 1)) {
    out.push_back(PointOfGamma::crit(std::move(y)));
  }
  return out;
}

bool FilterType::contains(const SymbolicSubset& c) const {
  if (kind == Kind::Principal) return c.contains(component);
  return c.meets_infinitely(y);
}

FilterType filter_type(const PointOfGamma& xi, const ComponentSystem& cs) {
  const auto& g = cs.graph();
  xi.require(g);
  FilterType out;
  if (xi.kind == PointOfGamma::Kind::End) {
    const auto* strip = g.find_strip(xi.strip);
    out.component = cs.locate(VertexId::strip(xi.strip, cs.tail_start(xi.strip), strip->period.vertices.front()));
    return out;
  }
  if (is_subset(xi.y, cs.deleted())) {
    out.kind = FilterType::Kind::CofiniteOnFamily;
    out.y = xi.y;
    return out;
  }
  out.component = unique_component_meeting(cs, xi.y);
  return out;
}

OrientedSeparation induced_orientation(const PointOfGamma& xi, const Separation& s) {
  if (!s.is_tame()) throw Error(ErrorKind::NotTame, s.describe());
  const auto filter = filter_type(xi, s.side.system());
  return filter.contains(s.side) ? s.toward_side() : s.away_from_side();
}

Orientation induced_orientation(const PointOfGamma& xi, const std::vector<Separation>& seps) {
  std::vector<OrientedSeparation> out;
  out.reserve(seps.size());
  for (const auto& s : seps) out.push_back(induced_orientation(xi, s));
  return Orientation(std::move(out));
}

namespace {

using Clique = std::vector<std::size_t>;

// Bron–Kerbosch with pivoting; stops as soon as `visit` returns true. Branches
// for which `hopeless(r, p)` holds are skipped.
bool maximal_cliques(const std::vector<std::vector<char>>& adj, Clique& r, Clique p, Clique x,
                     const std::function<bool(const Clique&)>& visit,
                     const std::function<bool(const Clique&, const Clique&)>& hopeless) {
  if (p.empty()) return x.empty() && visit(r);
  if (hopeless(r, p)) return false;
  std::size_t pivot = p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (auto u : *set) {
      std::size_t n = 0;
      for (auto v : p) n += adj[u][v] ? 1 : 0;
      if (n >= best) {
        best = n;
        pivot = u;
      }
    }
  }
  const Clique candidates = [&] {
    Clique c;
    for (auto v : p) {
      if (!adj[pivot][v]) c.push_back(v);
    }
    return c;
  }();
  for (auto v : candidates) {
    Clique np;
    Clique nx;
    for (auto u : p) {
      if (adj[v][u]) np.push_back(u);
    }
    for (auto u : x) {
      if (adj[v][u]) nx.push_back(u);
    }
    r.push_back(v);
    if (maximal_cliques(adj, r, std::move(np), std::move(nx), visit, hopeless)) return true;
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
  return false;
}

bool graph_is_finite(const PatternGraph& g) {
  const auto cs = remove_vertices(g, {});
  return std::none_of(cs->components().begin(), cs->components().end(),
                      [](const ComponentDescriptor& d) { return d.is_infinite(); });
}

}  // namespace

TangleVerdict check_tangle(const PatternGraph& g, const Orientation& o) {
  for (const auto& s : o.members()) {
    if (!s.separation().is_tame()) throw Error(ErrorKind::NotTame, s.separation().describe());
  }
  TangleVerdict verdict;
  if (graph_is_finite(g)) {
    verdict.kind = TangleVerdict::Kind::ForbiddenStar;  // the empty star
    return verdict;
  }
  const LiftedOrientation lifted(g, o);
  const std::size_t n = o.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && lifted.points_away(i, j)) {
        verdict.kind = TangleVerdict::Kind::ConsistencyViolation;
        verdict.pair = {i, j};
        return verdict;
      }
    }
  }

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = lifted.toward_each_other(i, j) ? 1 : 0;
  }
  Clique r;
  Clique p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  maximal_cliques(adj, r, p, {}, [&](const Clique& clique) {
    if (!lifted.interior(clique).is_finite()) return false;
    Clique witness = clique;
    std::sort(witness.begin(), witness.end());
    for (std::size_t k = 0; k < witness.size();) {
      Clique smaller = witness;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (lifted.interior(smaller).is_finite()) witness = std::move(smaller);
      else ++k;
    }
    verdict.kind = TangleVerdict::Kind::ForbiddenStar;
    verdict.star = std::move(witness);
    return true;
  }, [&](const Clique& r, const Clique& p) {
    // every extension of r has interior at least that of r ∪ p
    Clique all = r;
    all.insert(all.end(), p.begin(), p.end());
    return !lifted.interior(all).is_finite();
  });
  return verdict;
}

namespace {

std::uint64_t max_period(const VertexSet& y) {
  std::uint64_t out = 0;
  for (const auto& v : y) {
    if (v.kind == VertexKind::Strip || v.kind == VertexKind::PeriodicFan) out = std::max(out, v.period);
  }
  return out;
}

SymbolicSubset families_of(const SystemPtr& cs, const VertexSet& y) {
  auto out = SymbolicSubset::none(cs);
  for (auto i : cs->family(y)) {
    if (cs->at(i).is_family()) out.set_rule(i, CopyRule::all());
  }
  return out;
}

std::optional<SymbolicSubset> witness_side(const SystemPtr& cs, const FilterType& a, const FilterType& b) {
  using K = FilterType::Kind;
  if (a.kind == K::Principal && b.kind == K::Principal) {
    if (a.component == b.component) return std::nullopt;
    return SymbolicSubset::of(cs, {a.component});
  }
  if (a.kind == K::CofiniteOnFamily && b.kind == K::CofiniteOnFamily) {
    if (a.y == b.y) return std::nullopt;
    return families_of(cs, a.y);
  }
  const auto& cof = a.kind == K::CofiniteOnFamily ? a : b;
  const auto& principal = a.kind == K::Principal ? a : b;
  auto side = families_of(cs, cof.y);
  if (principal.component.copy) side.assign(principal.component, false);
  return side;
}

// Calls visit on every k-subset of pool in lexicographic order; stops when
// visit returns true.
bool for_each_subset(const std::vector<VertexId>& pool, std::size_t k,
                     const std::function<bool(const VertexSet&)>& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet x;
    for (auto i : idx) x.insert(pool[i]);
    if (visit(x)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Distinction distinguish(const PatternGraph& g, const PointOfGamma& xi1, const PointOfGamma& xi2,
                        DistinguishOptions options) {
  xi1.require(g);
  xi2.require(g);
  if (xi1 == xi2) throw Error(ErrorKind::PointsEqual, xi1.token());
  const std::uint64_t horizon =
      options.horizon ? options.horizon : 2 + std::max(max_period(xi1.y), max_period(xi2.y));

  std::set<VertexId> candidates(xi1.y.begin(), xi1.y.end());
  candidates.insert(xi2.y.begin(), xi2.y.end());
  for (const auto& c : g.spec().core.vertices) candidates.insert(VertexId::core(c));
  for (const auto& s : g.spec().strips) {
    for (std::uint64_t t = 0; t < horizon; ++t) {
      for (const auto& l : s.period.vertices) candidates.insert(VertexId::strip(s.id, t, l));
    }
  }
  const std::vector<VertexId> pool(candidates.begin(), candidates.end());

  std::optional<Distinction> found;
  for (std::size_t k = 0; k <= std::min(options.max_size, pool.size()) && !found; ++k) {
    for_each_subset(pool, k, [&](const VertexSet& x) {
      const auto cs = remove_vertices(g, x);
      const auto side = witness_side(cs, filter_type(xi1, *cs), filter_type(xi2, *cs));
      if (!side) return false;
      Separation sep{*side};
      auto o1 = induced_orientation(xi1, sep);
      auto o2 = induced_orientation(xi2, sep);
      if (o1 == o2) throw Error(ErrorKind::InvariantFailure, "witness does not separate at " + to_token(x));
      found = Distinction{std::move(sep), std::move(o1), std::move(o2)};
      return true;
    });
  }
  if (!found) {
    throw Error(ErrorKind::NotFoundWithinHorizon, xi1.token() + " vs " + xi2.token() + " at horizon " +
                                                      std::to_string(horizon) + " with |X| <= " +
                                                      std::to_string(options.max_size));
  }
  return *found;
}

OrientedSeparation perturb(const OrientedSeparation& s, const std::vector<ComponentRef>& moved) {
  auto toward = s.toward;
  for (const auto& r : moved) {
    const auto& cs = toward.system();
    cs.require(r);
    if (!r.copy && cs.at(r.index).kind == ComponentKind::Big) {
      throw Error(ErrorKind::NotFinite, cs.at(r.index).canonical());
    }
    toward.assign(r, !toward.contains(r));
  }
  return {std::move(toward)};
}

std::vector<VertexId> sample_pool(const PatternGraph& g, const SampleOptions& options) {
  std::vector<VertexId> pool;
  const auto& spec = g.spec();
  for (const auto& c : spec.core.vertices) pool.push_back(VertexId::core(c));
  for (const auto& s : spec.strips) {
    for (std::uint64_t t = 0; t < options.horizon; ++t) {
      for (const auto& l : s.period.vertices) pool.push_back(VertexId::strip(s.id, t, l));
      if (!s.periodic_fan) continue;
      for (std::uint64_t k = 0; k < options.copies; ++k) {
        for (const auto& l : s.periodic_fan->shape.vertices) pool.push_back(VertexId::periodic_fan(s.id, t, k, l));
      }
    }
  }
  for (const auto& f : spec.fans) {
    for (std::uint64_t k = 0; k < options.copies; ++k) {
      for (const auto& l : f.shape.vertices) pool.push_back(VertexId::fan(f.id, k, l));
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Separation> sample_tame_separations(SystemCache& cache, const SampleOptions& options) {
  const auto pool = sample_pool(cache.graph(), options);
  std::vector<Separation> out;
  for (std::size_t k = 0; k <= std::min(options.max_size, pool.size()); ++k) {
    for_each_subset(pool, k, [&](const VertexSet& x) {
      const auto cs = cache.get(x);
      std::vector<SymbolicSubset> sides{SymbolicSubset::none(cs)};
      for (std::size_t i = 0; i < cs->components().size(); ++i) {
        const auto& d = cs->at(i);
        if (!d.is_family()) {
          sides.push_back(SymbolicSubset::of(cs, {{i, std::nullopt}}));
          continue;
        }
        std::uint64_t first = 0;
        while (d.excluded.count(first)) ++first;
        sides.push_back(SymbolicSubset::of(cs, {{i, first}}));
      }
      for (const auto& y : cs->critical()) {
        auto whole = families_of(cs, y);
        sides.push_back(whole);
        for (auto i : cs->family(y)) {
          if (!cs->at(i).is_family()) continue;
          std::uint64_t first = 0;
          while (cs->at(i).excluded.count(first)) ++first;
          auto minus_one = whole;
          minus_one.assign({i, first}, false);
          sides.push_back(std::move(minus_one));
        }
      }
      const std::size_t start = out.size();
      for (auto& side : sides) {
        Separation sep{std::move(side)};
        if (!sep.is_tame()) continue;
        const bool seen = std::any_of(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(),
                                      [&](const Separation& s) { return s.same_as(sep); });
        if (!seen) out.push_back(std::move(sep));
      }
      return false;
    });
  }
  return out;
}

}  // namespace omegagraph
