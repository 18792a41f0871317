#include "omegagraph/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "omegagraph/errors.hpp"

namespace omegagraph {

using nlohmann::json;

namespace {

std::string kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Finite:
      return "finite";
    case ComponentKind::Family:
      return "family";
    case ComponentKind::Big:
      return "big";
  }
  return "?";
}

json copies_json(const std::set<std::uint64_t>& copies) { return json(std::vector<std::uint64_t>(copies.begin(), copies.end())); }

json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& y : sets) out.push_back(to_json(y));
  return out;
}

json point_json(const FduPoint& p) { return p.token(); }

json selection_json(const SeqSelection& s) {
  return {{"family", s.family}, {"excluded", copies_json(s.excluded)}, {"modulus", s.modulus}, {"residue", s.residue}};
}

json failures_json(const std::vector<std::string>& v) { return json(v); }

}  // namespace

std::size_t default_max_size(const PatternGraph& g) {
  std::size_t largest = 0;
  for (const auto& s : g.spec().strips) largest = std::max(largest, s.period.vertices.size());
  return g.spec().core.vertices.size() + largest;
}

std::vector<VertexSet> default_chain(const PatternGraph& g) {
  VertexSet core;
  for (const auto& c : g.spec().core.vertices) core.insert(VertexId::core(c));
  VertexSet wide = core;
  for (const auto& s : g.spec().strips) {
    for (const auto& l : s.period.vertices) wide.insert(VertexId::strip(s.id, 0, l));
  }
  std::vector<VertexSet> chain{{}};
  for (const auto& x : {core, wide}) {
    if (x != chain.back()) chain.push_back(x);
  }
  return chain;
}

json to_json(const VertexSet& x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(v.token());
  return out;
}

json to_json(const ComponentSystem& cs) {
  json comps = json::array();
  for (std::size_t i = 0; i < cs.components().size(); ++i) {
    const auto& d = cs.at(i);
    json c = {{"index", i}, {"kind", kind_name(d.kind)}, {"canonical", d.canonical()},
              {"neighbourhood", to_json(d.neighbourhood)}};
    if (d.is_family()) {
      c["family"] = d.family.token();
      c["excluded"] = copies_json(d.excluded);
    }
    comps.push_back(std::move(c));
  }
  return {{"deleted", to_json(cs.deleted())},
          {"components", std::move(comps)},
          {"critical", sets_json(cs.critical())},
          {"minus", json(cs.minus())},
          {"stabilization", {{"periods", cs.bound().periods}, {"copies", cs.bound().copies}}}};
}

json to_json(const Classification& c) {
  json ends = json::array();
  for (const auto& w : c.ends) {
    json e = {{"strip", w.strip}, {"tough", w.tough}};
    if (w.tough) e["separator"] = to_json(w.separator);
    if (w.periodic_fan) e["periodic_fan"] = *w.periodic_fan;
    ends.push_back(std::move(e));
  }
  return {{"tough", c.tough}, {"end_tough", c.end_tough}, {"trichotomy", to_string(c.trichotomy)}, {"ends", std::move(ends)}};
}

json to_json(const InverseSystemReport& r) {
  return {{"ok", r.ok()},
          {"functoriality", {{"checks", r.functoriality_checks}, {"failures", failures_json(r.functoriality_failures)}}},
          {"condition1", {{"checks", r.condition1_checks}, {"failures", failures_json(r.condition1_failures)}}},
          {"continuity", {{"checks", r.continuity_checks}, {"failures", failures_json(r.continuity_failures)}}}};
}

json to_json(const FduSpace& space) {
  json isolated = json::array();
  for (const auto& p : space.isolated) isolated.push_back(point_json(p));
  json clusters = json::array();
  for (const auto& c : space.clusters) {
    json members = json::array();
    for (const auto& p : c.members) members.push_back(point_json(p));
    json seqs = json::array();
    for (const auto& s : c.sequences) seqs.push_back(selection_json(s));
    clusters.push_back({{"limit", point_json(c.limit)}, {"members", std::move(members)}, {"sequences", std::move(seqs)}});
  }
  return {{"isolated", std::move(isolated)}, {"clusters", std::move(clusters)}};
}

json to_json(const LimitPoint& p) {
  json thread = json::array();
  for (const auto& q : p.thread) thread.push_back(point_json(q));
  return {{"point", p.point.token()}, {"thread", std::move(thread)}, {"compatible", p.compatible}};
}

json to_json(const TangleVerdict& v, const Orientation& o) {
  switch (v.kind) {
    case TangleVerdict::Kind::Ok:
      return {{"verdict", "ok"}};
    case TangleVerdict::Kind::ConsistencyViolation:
      return {{"verdict", "consistency_violation"},
              {"witness", {o[v.pair.first].describe(), o[v.pair.second].describe()}}};
    case TangleVerdict::Kind::ForbiddenStar: {
      json star = json::array();
      for (auto i : v.star) star.push_back(o[i].describe());
      return {{"verdict", "forbidden_star"}, {"witness", std::move(star)}};
    }
  }
  return {};
}

json to_json(const Distinction& d) {
  return {{"base", to_json(d.separation.base())},
          {"separation", d.separation.describe()},
          {"first", d.first.describe()},
          {"second", d.second.describe()}};
}

json graph_summary(const PatternGraph& g) {
  const auto& s = g.spec();
  std::vector<std::string> strips, periodic, fans;
  for (const auto& st : s.strips) {
    strips.push_back(st.id);
    if (st.periodic_fan) periodic.push_back(st.id);
  }
  for (const auto& f : s.fans) fans.push_back(f.id);
  return {{"core", s.core.vertices.size()},
          {"core_edges", s.core.edges.size()},
          {"strips", strips},
          {"periodic_fans", periodic},
          {"fans", fans},
          {"dominations", s.dominations.size()}};
}

json analyze(const PatternGraph& g, const ReportOptions& options) {
  const auto max_size = options.max_size ? options.max_size : default_max_size(g);
  SystemCache cache(g);
  const auto chain = default_chain(g);
  return {{"graph", graph_summary(g)},
          {"bounds", {{"horizon", options.horizon}, {"copies", options.copies}, {"max_size", max_size},
                      {"seps_size", options.seps_size}, {"seed", options.seed}}},
          {"classification", to_json(classify(g))},
          {"critical", {{"max_size", max_size}, {"horizon", options.horizon},
                        {"sets", sets_json(enumerate_critical(g, max_size, options.horizon))}}},
          {"gamma_system", {{"family", sets_json(chain)}, {"check", to_json(check_inverse_system(cache, chain))}}}};
}

std::vector<Separation> auto_separations(SystemCache& cache, const ReportOptions& options) {
  return sample_tame_separations(cache, {options.seps_size, options.horizon, options.copies});
}

json full_report(const PatternGraph& g, const ReportOptions& options) {
  auto out = analyze(g, options);
  SystemCache cache(g);

  std::vector<VertexSet> deletions = default_chain(g);
  const auto pool = sample_pool(g, {2, options.horizon, options.copies});
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < 3 && !pool.empty(); ++i) {
    VertexSet x;
    for (int j = 0; j < 2; ++j) x.insert(pool[rng() % pool.size()]);
    deletions.push_back(std::move(x));
  }
  json systems = json::array();
  for (const auto& x : deletions) {
    const auto cs = cache.get(x);
    auto entry = to_json(*cs);
    entry["gamma"] = to_json(gamma_space(*cs));
    systems.push_back(std::move(entry));
  }
  out["components"] = std::move(systems);

  const auto seps = auto_separations(cache, options);
  const auto points = gamma_points(g, options.horizon);
  json tangles = json::array();
  for (const auto& xi : points) {
    const auto o = induced_orientation(xi, seps);
    auto entry = to_json(check_tangle(g, o), o);
    entry["point"] = xi.token();
    tangles.push_back(std::move(entry));
  }
  out["tangles"] = {{"separations", seps.size()}, {"points", std::move(tangles)}};

  json distinctions = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      json entry = {{"points", {points[i].token(), points[j].token()}}};
      try {
        entry["witness"] = to_json(distinguish(g, points[i], points[j]));
      } catch (const Error& e) {
        entry["error"] = std::string(to_string(e.kind())) + ": " + e.detail();
      }
      distinctions.push_back(std::move(entry));
    }
  }
  out["distinctions"] = std::move(distinctions);
  out["limit_points"] = json::array();
  for (const auto& p : limit_points(cache, default_chain(g), options.horizon)) out["limit_points"].push_back(to_json(p));
  return out;
}

std::string truncation_to_dot(const FiniteGraph& t, const std::string& name) {
  std::ostringstream out;
  out << "graph " << json(name).dump() << " {\n";
  for (const auto& v : t.vertices) {
    out << "  " << json(v.token()).dump();
    if (t.boundary.count(v)) out << " [shape=box, style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const auto& [a, b] : t.edges) out << "  " << json(a.token()).dump() << " -- " << json(b.token()).dump() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace omegagraph
