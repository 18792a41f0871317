#include "omegagraph/pattern_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "omegagraph/errors.hpp"

namespace omegagraph {

using Adjacency = std::map<std::string, std::set<std::string>>;

struct PatternGraph::Data {
  GraphSpec spec;

  std::set<std::string> core;
  Adjacency core_adj;

  struct StripIndex {
    const StripSpec* spec = nullptr;
    std::set<std::string> locals;
    Adjacency adj;
    Adjacency fwd;  // u -> v: (t, u) ~ (t + 1, v)
    Adjacency bwd;
    std::map<std::pair<std::uint64_t, std::string>, std::set<std::string>> attached_cores;
    Adjacency dominators;  // local -> dominating cores
    std::set<std::string> fan_locals;
    Adjacency fan_adj;
    Adjacency fan_to_strip;  // periodic-fan local -> strip locals
    Adjacency strip_to_fan;
  };
  std::map<std::string, StripIndex> strips;

  struct FanIndex {
    const FanSpec* spec = nullptr;
    std::set<std::string> locals;
    Adjacency adj;
    Adjacency to_core;
  };
  std::map<std::string, FanIndex> fans;

  struct StripSlot {
    std::string strip;
    std::uint64_t period;
    std::string local;
  };
  std::map<std::string, std::vector<StripSlot>> attachments_by_core;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> dominations_by_core;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> fans_by_core;
};

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ':' || c == '/' || c == ',' || c == '{' || c == '}' || c == '"' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

Adjacency adjacency_of(const TemplateGraph& g) {
  Adjacency adj;
  for (const auto& v : g.vertices) adj[v];
  for (const auto& [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

bool connected(const TemplateGraph& g) {
  if (g.vertices.empty()) return false;
  const auto adj = adjacency_of(g);
  std::set<std::string> seen{g.vertices.front()};
  std::queue<std::string> todo;
  todo.push(g.vertices.front());
  while (!todo.empty()) {
    auto u = todo.front();
    todo.pop();
    for (const auto& w : adj.at(u)) {
      if (seen.insert(w).second) todo.push(w);
    }
  }
  return seen.size() == std::set<std::string>(g.vertices.begin(), g.vertices.end()).size();
}

class Validator {
 public:
  explicit Validator(GraphSpec spec) : spec_(std::move(spec)) {}

  GraphSpec run() {
    check_names();
    check_template("core", spec_.core, /*require_connected=*/false);
    const std::set<std::string> core(spec_.core.vertices.begin(), spec_.core.vertices.end());
    for (auto& strip : spec_.strips) check_strip(strip, core);
    for (const auto& fan : spec_.fans) check_fan("fan " + fan.id, fan, core);
    check_dominations(core);
    fold_extra_edges(core);
    if (!violations_.empty()) throw ValidationError(std::move(violations_));
    return std::move(spec_);
  }

 private:
  void fail(ErrorKind kind, std::string element, std::string message) {
    violations_.push_back({kind, std::move(element), std::move(message)});
  }

  void check_names() {
    std::map<std::string, std::string> owner_of_local;
    auto claim = [&](const std::string& name, const std::string& owner) {
      if (!valid_name(name)) {
        fail(ErrorKind::MalformedSpec, owner, "invalid vertex name '" + name + "'");
        return;
      }
      auto [it, fresh] = owner_of_local.emplace(name, owner);
      if (!fresh) {
        fail(ErrorKind::NameCollision, owner,
             "vertex name '" + name + "' already used by " + it->second);
      }
    };
    for (const auto& v : spec_.core.vertices) claim(v, "core");
    std::set<std::string> strip_ids;
    std::set<std::string> fan_ids;
    for (const auto& s : spec_.strips) {
      if (!valid_name(s.id)) fail(ErrorKind::MalformedSpec, "strip", "invalid strip id '" + s.id + "'");
      if (!strip_ids.insert(s.id).second) fail(ErrorKind::NameCollision, "strip " + s.id, "duplicate strip id");
      for (const auto& v : s.period.vertices) claim(v, "strip " + s.id);
      if (s.periodic_fan) {
        for (const auto& v : s.periodic_fan->shape.vertices) claim(v, "periodic fan of strip " + s.id);
      }
    }
    for (const auto& f : spec_.fans) {
      if (!valid_name(f.id)) fail(ErrorKind::MalformedSpec, "fan", "invalid fan id '" + f.id + "'");
      if (!fan_ids.insert(f.id).second) fail(ErrorKind::NameCollision, "fan " + f.id, "duplicate fan id");
      for (const auto& v : f.shape.vertices) claim(v, "fan " + f.id);
    }
  }

  void check_template(const std::string& element, const TemplateGraph& g, bool require_connected) {
    const std::set<std::string> names(g.vertices.begin(), g.vertices.end());
    for (const auto& [u, v] : g.edges) {
      if (!names.count(u) || !names.count(v)) {
        fail(ErrorKind::DanglingReference, element, "edge " + u + "-" + v + " references an undeclared vertex");
      } else if (u == v) {
        fail(ErrorKind::MalformedSpec, element, "self-loop at " + u);
      }
    }
    if (require_connected && !connected(g)) {
      fail(ErrorKind::DisconnectedTemplate, element, "template must be a nonempty connected graph");
    }
  }

  void check_fan(const std::string& element, const FanSpec& fan, const std::set<std::string>& hosts) {
    check_template(element, fan.shape, /*require_connected=*/true);
    const std::set<std::string> locals(fan.shape.vertices.begin(), fan.shape.vertices.end());
    const std::set<std::string> attach(fan.attachment_set.begin(), fan.attachment_set.end());
    for (const auto& a : attach) {
      if (!hosts.count(a)) fail(ErrorKind::DanglingReference, element, "attachment vertex '" + a + "' does not exist");
    }
    std::set<std::string> covered;
    for (const auto& [local, host] : fan.attachment_edges) {
      if (!locals.count(local)) {
        fail(ErrorKind::DanglingReference, element, "attachment edge from unknown template vertex '" + local + "'");
      }
      if (!attach.count(host)) {
        fail(ErrorKind::DanglingReference, element, "attachment edge to '" + host + "' outside the attachment set");
      }
      covered.insert(host);
    }
    for (const auto& a : attach) {
      if (!covered.count(a)) {
        fail(ErrorKind::AttachmentNotCovered, element, "attachment vertex '" + a + "' receives no edge from the template");
      }
    }
  }

  void check_strip(StripSpec& strip, const std::set<std::string>& core) {
    const std::string element = "strip " + strip.id;
    check_template(element, strip.period, /*require_connected=*/true);
    const std::set<std::string> locals(strip.period.vertices.begin(), strip.period.vertices.end());
    if (strip.inter_period_edges.empty()) {
      fail(ErrorKind::DisconnectedPeriodChain, element, "no inter-period edge joins consecutive periods");
    }
    for (const auto& [u, v] : strip.inter_period_edges) {
      if (!locals.count(u) || !locals.count(v)) {
        fail(ErrorKind::DanglingReference, element, "inter-period edge " + u + "->" + v + " references an undeclared vertex");
      }
    }
    for (const auto& a : strip.core_attachments) {
      if (!core.count(a.core)) fail(ErrorKind::DanglingReference, element, "core attachment to unknown core vertex '" + a.core + "'");
      if (!locals.count(a.local)) fail(ErrorKind::DanglingReference, element, "core attachment to unknown local '" + a.local + "'");
    }
    if (strip.periodic_fan) {
      if (strip.periodic_fan->attachment_set.empty()) {
        fail(ErrorKind::MalformedSpec, element, "periodic fan needs a nonempty attachment set");
      }
      check_fan("periodic fan of strip " + strip.id, *strip.periodic_fan, locals);
    }
  }

  void check_dominations(const std::set<std::string>& core) {
    for (auto& d : spec_.dominations) {
      const std::string element = "domination " + d.core + "->" + d.strip;
      if (!core.count(d.core)) fail(ErrorKind::DanglingReference, element, "unknown core vertex '" + d.core + "'");
      auto it = std::find_if(spec_.strips.begin(), spec_.strips.end(), [&](const StripSpec& s) { return s.id == d.strip; });
      if (it == spec_.strips.end()) {
        fail(ErrorKind::DanglingReference, element, "unknown strip '" + d.strip + "'");
        continue;
      }
      if (d.local.empty() && !it->period.vertices.empty()) d.local = it->period.vertices.front();
      if (std::find(it->period.vertices.begin(), it->period.vertices.end(), d.local) == it->period.vertices.end()) {
        fail(ErrorKind::DanglingReference, element, "unknown local '" + d.local + "'");
      }
    }
  }

  void fold_extra_edges(const std::set<std::string>& core) {
    for (const auto& [a, b] : spec_.edges) {
      const std::string element = "edge " + a + " -- " + b;
      VertexId u;
      VertexId v;
      try {
        u = VertexId::parse(a);
        v = VertexId::parse(b);
      } catch (const Error& e) {
        fail(ErrorKind::MalformedSpec, element, e.detail());
        continue;
      }
      if (v.kind == VertexKind::Core && u.kind != VertexKind::Core) std::swap(u, v);
      const bool strip_u = u.kind == VertexKind::Strip || u.kind == VertexKind::PeriodicFan;
      const bool strip_v = v.kind == VertexKind::Strip || v.kind == VertexKind::PeriodicFan;
      if (strip_u && strip_v) {
        fail(ErrorKind::StripStripEdge, element,
             u.owner == v.owner ? "edges inside a strip must be declared periodically"
                                : "strips " + u.owner + " and " + v.owner + " must not be adjacent");
        continue;
      }
      if (u.kind != VertexKind::Core || (v.kind != VertexKind::Core && v.kind != VertexKind::Strip)) {
        fail(ErrorKind::UnsupportedEdge, element, "only core-core and core-strip edges may be listed explicitly");
        continue;
      }
      if (!core.count(u.local)) {
        fail(ErrorKind::DanglingReference, element, "unknown core vertex '" + u.local + "'");
        continue;
      }
      if (v.kind == VertexKind::Core) {
        if (!core.count(v.local)) {
          fail(ErrorKind::DanglingReference, element, "unknown core vertex '" + v.local + "'");
        } else if (u == v) {
          fail(ErrorKind::MalformedSpec, element, "self-loop");
        } else {
          spec_.core.edges.emplace_back(u.local, v.local);
        }
        continue;
      }
      auto it = std::find_if(spec_.strips.begin(), spec_.strips.end(), [&](const StripSpec& s) { return s.id == v.owner; });
      if (it == spec_.strips.end() ||
          std::find(it->period.vertices.begin(), it->period.vertices.end(), v.local) == it->period.vertices.end()) {
        fail(ErrorKind::DanglingReference, element, "unknown strip vertex '" + v.token() + "'");
        continue;
      }
      it->core_attachments.push_back({u.local, v.period, v.local});
    }
    spec_.edges.clear();
  }

  GraphSpec spec_;
  std::vector<Violation> violations_;
};

}  // namespace

PatternGraph PatternGraph::validate(const GraphSpec& raw) {
  auto data = std::make_shared<Data>();
  data->spec = Validator(raw).run();
  const auto& spec = data->spec;

  data->core.insert(spec.core.vertices.begin(), spec.core.vertices.end());
  data->core_adj = adjacency_of(spec.core);

  for (const auto& s : spec.strips) {
    auto& idx = data->strips[s.id];
    idx.spec = &s;
    idx.locals.insert(s.period.vertices.begin(), s.period.vertices.end());
    idx.adj = adjacency_of(s.period);
    for (const auto& [u, v] : s.inter_period_edges) {
      idx.fwd[u].insert(v);
      idx.bwd[v].insert(u);
    }
    for (const auto& a : s.core_attachments) {
      idx.attached_cores[{a.period, a.local}].insert(a.core);
      data->attachments_by_core[a.core].push_back({s.id, a.period, a.local});
    }
    if (s.periodic_fan) {
      const auto& pf = *s.periodic_fan;
      idx.fan_locals.insert(pf.shape.vertices.begin(), pf.shape.vertices.end());
      idx.fan_adj = adjacency_of(pf.shape);
      for (const auto& [local, host] : pf.attachment_edges) {
        idx.fan_to_strip[local].insert(host);
        idx.strip_to_fan[host].insert(local);
      }
    }
  }
  for (const auto& d : spec.dominations) {
    data->strips[d.strip].dominators[d.local].insert(d.core);
    data->dominations_by_core[d.core].emplace_back(d.strip, d.local);
  }
  for (const auto& f : spec.fans) {
    auto& idx = data->fans[f.id];
    idx.spec = &f;
    idx.locals.insert(f.shape.vertices.begin(), f.shape.vertices.end());
    idx.adj = adjacency_of(f.shape);
    for (const auto& [local, core] : f.attachment_edges) {
      idx.to_core[local].insert(core);
      data->fans_by_core[core].emplace_back(f.id, local);
    }
  }
  for (auto& [core, list] : data->fans_by_core) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (auto& [core, list] : data->dominations_by_core) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return PatternGraph(std::move(data));
}

const GraphSpec& PatternGraph::spec() const { return data_->spec; }

bool PatternGraph::contains(const VertexId& v) const {
  switch (v.kind) {
    case VertexKind::Core:
      return v.owner.empty() && v.period == 0 && v.copy == 0 && data_->core.count(v.local) > 0;
    case VertexKind::Strip: {
      auto it = data_->strips.find(v.owner);
      return v.copy == 0 && it != data_->strips.end() && it->second.locals.count(v.local) > 0;
    }
    case VertexKind::Fan: {
      auto it = data_->fans.find(v.owner);
      return v.period == 0 && it != data_->fans.end() && it->second.locals.count(v.local) > 0;
    }
    case VertexKind::PeriodicFan: {
      auto it = data_->strips.find(v.owner);
      return it != data_->strips.end() && it->second.fan_locals.count(v.local) > 0;
    }
  }
  return false;
}

void PatternGraph::require(const VertexId& v) const {
  if (!contains(v)) throw Error(ErrorKind::UnknownVertex, v.token());
}

const StripSpec* PatternGraph::find_strip(const std::string& id) const {
  auto it = data_->strips.find(id);
  return it == data_->strips.end() ? nullptr : it->second.spec;
}

const FanSpec* PatternGraph::find_fan(const std::string& id) const {
  auto it = data_->fans.find(id);
  return it == data_->fans.end() ? nullptr : it->second.spec;
}

bool PatternGraph::has_fans() const {
  if (!data_->spec.fans.empty()) return true;
  return std::any_of(data_->spec.strips.begin(), data_->spec.strips.end(),
                     [](const StripSpec& s) { return s.periodic_fan.has_value(); });
}

VertexSet PatternGraph::fan_attachment(const FanSpec& fan) const {
  VertexSet out;
  for (const auto& a : fan.attachment_set) out.insert(VertexId::core(a));
  return out;
}

VertexSet PatternGraph::periodic_attachment(const StripSpec& strip, std::uint64_t period) const {
  VertexSet out;
  if (!strip.periodic_fan) return out;
  for (const auto& l : strip.periodic_fan->attachment_set) out.insert(VertexId::strip(strip.id, period, l));
  return out;
}

Neighbourhood PatternGraph::neighbours(const VertexId& v) const {
  require(v);
  Neighbourhood out;
  const auto& d = *data_;
  switch (v.kind) {
    case VertexKind::Core: {
      for (const auto& w : d.core_adj.at(v.local)) out.finite.insert(VertexId::core(w));
      if (auto it = d.attachments_by_core.find(v.local); it != d.attachments_by_core.end()) {
        for (const auto& slot : it->second) out.finite.insert(VertexId::strip(slot.strip, slot.period, slot.local));
      }
      if (auto it = d.dominations_by_core.find(v.local); it != d.dominations_by_core.end()) {
        for (const auto& [strip, local] : it->second) {
          out.rules.push_back({NeighbourRule::Kind::EveryPeriod, strip, 0, local});
        }
      }
      if (auto it = d.fans_by_core.find(v.local); it != d.fans_by_core.end()) {
        for (const auto& [fan, local] : it->second) {
          out.rules.push_back({NeighbourRule::Kind::EveryCopy, fan, 0, local});
        }
      }
      break;
    }
    case VertexKind::Strip: {
      const auto& s = d.strips.at(v.owner);
      for (const auto& w : s.adj.at(v.local)) out.finite.insert(VertexId::strip(v.owner, v.period, w));
      if (auto it = s.fwd.find(v.local); it != s.fwd.end()) {
        for (const auto& w : it->second) out.finite.insert(VertexId::strip(v.owner, v.period + 1, w));
      }
      if (auto it = s.bwd.find(v.local); it != s.bwd.end() && v.period > 0) {
        for (const auto& w : it->second) out.finite.insert(VertexId::strip(v.owner, v.period - 1, w));
      }
      if (auto it = s.attached_cores.find({v.period, v.local}); it != s.attached_cores.end()) {
        for (const auto& c : it->second) out.finite.insert(VertexId::core(c));
      }
      if (auto it = s.dominators.find(v.local); it != s.dominators.end()) {
        for (const auto& c : it->second) out.finite.insert(VertexId::core(c));
      }
      if (auto it = s.strip_to_fan.find(v.local); it != s.strip_to_fan.end()) {
        for (const auto& u : it->second) {
          out.rules.push_back({NeighbourRule::Kind::EveryPeriodicCopy, v.owner, v.period, u});
        }
      }
      break;
    }
    case VertexKind::Fan: {
      const auto& f = d.fans.at(v.owner);
      for (const auto& w : f.adj.at(v.local)) out.finite.insert(VertexId::fan(v.owner, v.copy, w));
      if (auto it = f.to_core.find(v.local); it != f.to_core.end()) {
        for (const auto& c : it->second) out.finite.insert(VertexId::core(c));
      }
      break;
    }
    case VertexKind::PeriodicFan: {
      const auto& s = d.strips.at(v.owner);
      for (const auto& w : s.fan_adj.at(v.local)) {
        out.finite.insert(VertexId::periodic_fan(v.owner, v.period, v.copy, w));
      }
      if (auto it = s.fan_to_strip.find(v.local); it != s.fan_to_strip.end()) {
        for (const auto& l : it->second) out.finite.insert(VertexId::strip(v.owner, v.period, l));
      }
      break;
    }
  }
  std::sort(out.rules.begin(), out.rules.end());
  return out;
}

bool PatternGraph::adjacent(const VertexId& u, const VertexId& v) const {
  return neighbours(u).contains(v);
}

bool NeighbourRule::matches(const VertexId& v) const {
  switch (kind) {
    case Kind::EveryPeriod:
      return v.kind == VertexKind::Strip && v.owner == owner && v.local == local;
    case Kind::EveryCopy:
      return v.kind == VertexKind::Fan && v.owner == owner && v.local == local;
    case Kind::EveryPeriodicCopy:
      return v.kind == VertexKind::PeriodicFan && v.owner == owner && v.period == period &&
             v.local == local;
  }
  return false;
}

bool Neighbourhood::contains(const VertexId& v) const {
  if (finite.count(v)) return true;
  return std::any_of(rules.begin(), rules.end(), [&](const NeighbourRule& r) { return r.matches(v); });
}

Neighbourhood neighbors(const PatternGraph& g, const VertexId& v) { return g.neighbours(v); }

DegreeClass degree_class(const PatternGraph& g, const VertexId& v) {
  const auto n = g.neighbours(v);
  if (!n.rules.empty()) return InfiniteDegree{};
  return FiniteDegree{n.finite.size()};
}

FiniteGraph truncate(const PatternGraph& g, TruncationBounds bounds) {
  const auto& spec = g.spec();
  FiniteGraph out;
  for (const auto& c : spec.core.vertices) out.vertices.push_back(VertexId::core(c));
  for (const auto& s : spec.strips) {
    for (std::uint64_t t = 0; t < bounds.periods; ++t) {
      for (const auto& l : s.period.vertices) out.vertices.push_back(VertexId::strip(s.id, t, l));
      if (!s.periodic_fan) continue;
      for (std::uint64_t k = 0; k < bounds.copies; ++k) {
        for (const auto& l : s.periodic_fan->shape.vertices) {
          out.vertices.push_back(VertexId::periodic_fan(s.id, t, k, l));
        }
      }
    }
  }
  for (const auto& f : spec.fans) {
    for (std::uint64_t k = 0; k < bounds.copies; ++k) {
      for (const auto& l : f.shape.vertices) out.vertices.push_back(VertexId::fan(f.id, k, l));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  auto inside = [&](const VertexId& v) {
    return std::binary_search(out.vertices.begin(), out.vertices.end(), v);
  };
  std::set<std::pair<VertexId, VertexId>> edges;
  auto add_edge = [&](const VertexId& a, const VertexId& b) {
    if (b < a) edges.emplace(b, a);
    else edges.emplace(a, b);
  };
  for (const auto& v : out.vertices) {
    const auto n = g.neighbours(v);
    for (const auto& w : n.finite) {
      if (inside(w)) add_edge(v, w);
      else out.boundary.insert(v);
    }
    for (const auto& rule : n.rules) {
      // every rule names infinitely many vertices, so some lie outside
      out.boundary.insert(v);
      switch (rule.kind) {
        case NeighbourRule::Kind::EveryPeriod:
          for (std::uint64_t t = 0; t < bounds.periods; ++t) add_edge(v, VertexId::strip(rule.owner, t, rule.local));
          break;
        case NeighbourRule::Kind::EveryCopy:
          for (std::uint64_t k = 0; k < bounds.copies; ++k) add_edge(v, VertexId::fan(rule.owner, k, rule.local));
          break;
        case NeighbourRule::Kind::EveryPeriodicCopy:
          for (std::uint64_t k = 0; k < bounds.copies; ++k) {
            add_edge(v, VertexId::periodic_fan(rule.owner, rule.period, k, rule.local));
          }
          break;
      }
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace omegagraph
