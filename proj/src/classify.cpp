#include "omegagraph/classify.hpp"

#include <algorithm>
#include <limits>

#include "omegagraph/errors.hpp"

namespace omegagraph {

namespace {

constexpr auto kAnySize = std::numeric_limits<std::size_t>::max();

// Core vertices that can glue a strip tail to anything else.
VertexSet end_separator(const PatternGraph& g, const StripSpec& strip) {
  VertexSet x;
  for (const auto& f : g.spec().fans) {
    for (const auto& v : g.fan_attachment(f)) x.insert(v);
  }
  for (const auto& d : g.spec().dominations) x.insert(VertexId::core(d.core));
  for (const auto& a : strip.core_attachments) x.insert(VertexId::core(a.core));
  return x;
}

bool tail_is_fan_free(const PatternGraph& g, const StripSpec& strip, const VertexSet& x) {
  auto cs = remove_vertices(g, x);
  const auto start = cs->tail_start(strip.id);
  const auto ref = cs->locate(VertexId::strip(strip.id, start, strip.period.vertices.front()));
  const auto& c = cs->at(ref.index);
  if (!c.absorbed.empty()) return false;
  for (const auto& t : c.tails) {
    const auto* s = g.find_strip(t.strip);
    if (s == nullptr || s->periodic_fan) return false;
  }
  return true;
}

}  // namespace

bool is_tough(const PatternGraph& g) {
  const bool tough = !g.has_fans();
  const bool no_crit = declared_critical_sets(g, kAnySize, 1).empty() &&
                       remove_vertices(g, {})->critical().empty();
  if (tough != no_crit) {
    throw Error(ErrorKind::InvariantFailure, "fan declarations disagree with critical sets");
  }
  return tough;
}

std::vector<EndWitness> end_witnesses(const PatternGraph& g) {
  std::vector<EndWitness> out;
  for (const auto& s : g.spec().strips) {
    EndWitness w{s.id, !s.periodic_fan.has_value(), {}, std::nullopt};
    if (w.tough) {
      w.separator = end_separator(g, s);
      if (!tail_is_fan_free(g, s, w.separator)) {
        throw Error(ErrorKind::InvariantFailure, "separator " + to_token(w.separator) +
                                                     " leaves a fan next to the tail of " + s.id);
      }
    } else {
      w.periodic_fan = "pfan:" + s.id;
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_end_tough(const PatternGraph& g) {
  const auto ends = end_witnesses(g);
  return std::all_of(ends.begin(), ends.end(), [](const EndWitness& w) { return w.tough; });
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Tough:
      return "Tough";
    case Trichotomy::OnePointCase:
      return "OnePointCase";
    case Trichotomy::NeitherCase:
      return "NeitherCase";
  }
  return "?";
}

Classification classify(const PatternGraph& g) {
  Classification c;
  c.tough = is_tough(g);
  c.ends = end_witnesses(g);
  c.end_tough = std::all_of(c.ends.begin(), c.ends.end(), [](const EndWitness& w) { return w.tough; });
  if (c.tough) {
    c.trichotomy = Trichotomy::Tough;
  } else if (c.end_tough) {
    c.trichotomy = Trichotomy::OnePointCase;
  } else {
    c.trichotomy = Trichotomy::NeitherCase;
  }
  return c;
}

DegreeExplanation infinite_degree_explanation(const PatternGraph& g, const VertexId& v) {
  g.require(v);
  DegreeExplanation out;
  const auto degree = degree_class(g, v);
  if (const auto* d = std::get_if<FiniteDegree>(&degree)) {
    out.finite_degree = d->value;
    return out;
  }

  const auto n = neighbors(g, v);
  for (const auto& rule : n.rules) {
    if (rule.kind == NeighbourRule::Kind::EveryPeriod) out.dominated_strips.push_back(rule.owner);
  }

  std::set<VertexSet> candidates;
  for (const auto& f : g.spec().fans) {
    auto a = g.fan_attachment(f);
    if (a.count(v)) candidates.insert(std::move(a));
  }
  if (v.kind == VertexKind::Strip) {
    const auto* s = g.find_strip(v.owner);
    if (s != nullptr && s->periodic_fan) {
      auto a = g.periodic_attachment(*s, v.period);
      if (a.count(v)) candidates.insert(std::move(a));
    }
  }
  for (const auto& y : candidates) {
    if (is_critical(g, y)) out.critical_sets.push_back(y);
  }

  std::sort(out.dominated_strips.begin(), out.dominated_strips.end());
  out.dominated_strips.erase(std::unique(out.dominated_strips.begin(), out.dominated_strips.end()),
                             out.dominated_strips.end());
  if (out.dominated_strips.empty() && out.critical_sets.empty()) {
    throw Error(ErrorKind::InvariantFailure, v.token() + " has infinite degree but no explanation");
  }
  return out;
}

std::vector<VertexSet> enumerate_critical(const PatternGraph& g, std::size_t max_size,
                                          std::uint64_t horizon) {
  auto sets = declared_critical_sets(g, max_size, horizon);
  for (const auto& y : sets) {
    if (!is_critical(g, y)) {
      throw Error(ErrorKind::InvariantFailure, "declared set " + to_token(y) + " is not critical");
    }
  }
  return sets;
}

}  // namespace omegagraph
