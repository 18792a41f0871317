#include "omegagraph/component_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "omegagraph/errors.hpp"

namespace omegagraph {

FamilyHandle FamilyHandle::core_fan(std::string fan_id) {
  return FamilyHandle{Kind::CoreFan, std::move(fan_id), 0};
}

FamilyHandle FamilyHandle::periodic(std::string strip_id, std::uint64_t period) {
  return FamilyHandle{Kind::PeriodicFan, std::move(strip_id), period};
}

std::string FamilyHandle::token() const {
  if (kind == Kind::CoreFan) return "fan:" + owner;
  return "pfan:" + owner + "/" + std::to_string(period);
}

VertexId FamilyHandle::member(std::uint64_t copy, const std::string& local) const {
  if (kind == Kind::CoreFan) return VertexId::fan(owner, copy, local);
  return VertexId::periodic_fan(owner, period, copy, local);
}

std::optional<FamilyHandle> FamilyHandle::of(const VertexId& v) {
  if (v.kind == VertexKind::Fan) return core_fan(v.owner);
  if (v.kind == VertexKind::PeriodicFan) return periodic(v.owner, v.period);
  return std::nullopt;
}

namespace {

std::string copies_token(const std::set<std::uint64_t>& copies) {
  std::string out = "{";
  bool first = true;
  for (auto k : copies) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(k);
  }
  return out + "}";
}

const std::vector<std::string>& shape_of(const PatternGraph& g, const FamilyHandle& h) {
  if (h.kind == FamilyHandle::Kind::CoreFan) return g.find_fan(h.owner)->shape.vertices;
  return g.find_strip(h.owner)->periodic_fan->shape.vertices;
}

bool within(const VertexId& v, TruncationBounds b) {
  switch (v.kind) {
    case VertexKind::Core: return true;
    case VertexKind::Strip: return v.period < b.periods;
    case VertexKind::Fan: return v.copy < b.copies;
    case VertexKind::PeriodicFan: return v.period < b.periods && v.copy < b.copies;
  }
  return false;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string ComponentDescriptor::canonical() const {
  std::ostringstream out;
  switch (kind) {
    case ComponentKind::Finite: {
      out << "finite{";
      for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? "," : "") << vertices[i].token();
      out << "}";
      break;
    }
    case ComponentKind::Family:
      out << "family:" << family.token() << "\\" << copies_token(excluded);
      break;
    case ComponentKind::Big: {
      out << "big{";
      bool first = true;
      auto sep = [&] {
        if (!first) out << ";";
        first = false;
      };
      for (const auto& v : vertices) {
        sep();
        out << v.token();
      }
      for (const auto& t : tails) {
        sep();
        out << "tail:" << t.strip << ">=" << t.from_period;
      }
      for (const auto& a : absorbed) {
        sep();
        out << a.family.token() << "\\" << copies_token(a.excluded);
      }
      out << "}";
      break;
    }
  }
  return out.str();
}

ComponentSystem::ComponentSystem(PatternGraph graph, VertexSet deleted)
    : graph_(std::move(graph)), deleted_(std::move(deleted)) {
  build();
}

const ComponentDescriptor& ComponentSystem::at(std::size_t index) const {
  if (index >= components_.size()) {
    throw Error(ErrorKind::UnknownComponent, "component index " + std::to_string(index));
  }
  return components_[index];
}

std::uint64_t ComponentSystem::tail_start(const std::string& strip) const {
  auto it = tail_start_.find(strip);
  if (it == tail_start_.end()) throw Error(ErrorKind::UnknownVertex, "unknown strip " + strip);
  return it->second;
}

std::size_t ComponentSystem::node_of(const VertexId& v) const {
  if (auto it = vertex_nodes_.find(v); it != vertex_nodes_.end()) return it->second;
  if ((v.kind == VertexKind::Strip || v.kind == VertexKind::PeriodicFan) &&
      v.period >= tail_start_.at(v.owner)) {
    return tail_nodes_.at(v.owner);
  }
  if (auto handle = FamilyHandle::of(v)) {
    auto it = family_nodes_.find(*handle);
    const auto hit = hit_copies_.find(*handle);
    const bool is_hit = hit != hit_copies_.end() && hit->second.count(v.copy) > 0;
    if (it != family_nodes_.end() && !is_hit) return it->second;
  }
  throw Error(ErrorKind::InvariantFailure, "no component node for " + v.token());
}

void ComponentSystem::build() {
  const auto& spec = graph_.spec();
  for (const auto& x : deleted_) graph_.require(x);

  // stabilization
  for (const auto& s : spec.strips) {
    std::uint64_t start = 0;
    for (const auto& a : s.core_attachments) start = std::max(start, a.period + 1);
    tail_start_[s.id] = start;
    bound_.periods = std::max(bound_.periods, start);
  }
  for (const auto& x : deleted_) {
    if (x.kind == VertexKind::Strip || x.kind == VertexKind::PeriodicFan) {
      auto& start = tail_start_[x.owner];
      start = std::max(start, x.period + 1);
      bound_.periods = std::max(bound_.periods, x.period + 1);
    }
    if (auto handle = FamilyHandle::of(x)) {
      hit_copies_[*handle].insert(x.copy);
      bound_.copies = std::max(bound_.copies, x.copy + 1);
    }
  }

  auto add_vertex = [&](const VertexId& v) {
    if (deleted_.count(v)) return;
    vertex_nodes_.emplace(v, nodes_.size());
    nodes_.push_back({Node::Kind::Vertex, v, {}, {}});
  };
  for (const auto& c : spec.core.vertices) add_vertex(VertexId::core(c));
  for (const auto& s : spec.strips) {
    for (std::uint64_t t = 0; t < tail_start_[s.id]; ++t) {
      for (const auto& l : s.period.vertices) add_vertex(VertexId::strip(s.id, t, l));
    }
  }
  for (const auto& [handle, copies] : hit_copies_) {
    for (auto k : copies) {
      for (const auto& l : shape_of(graph_, handle)) add_vertex(handle.member(k, l));
    }
  }
  for (const auto& s : spec.strips) {
    tail_nodes_.emplace(s.id, nodes_.size());
    nodes_.push_back({Node::Kind::Tail, {}, s.id, {}});
    if (!s.periodic_fan) continue;
    for (std::uint64_t t = 0; t < tail_start_[s.id]; ++t) {
      auto h = FamilyHandle::periodic(s.id, t);
      family_nodes_.emplace(h, nodes_.size());
      nodes_.push_back({Node::Kind::Family, {}, {}, h});
    }
  }
  for (const auto& f : spec.fans) {
    auto h = FamilyHandle::core_fan(f.id);
    family_nodes_.emplace(h, nodes_.size());
    nodes_.push_back({Node::Kind::Family, {}, {}, h});
  }

  // Nodes a symbolic neighbour rule reaches, explicit copies included.
  auto rule_nodes = [&](const NeighbourRule& rule) {
    std::vector<std::size_t> out;
    switch (rule.kind) {
      case NeighbourRule::Kind::EveryPeriod: {
        out.push_back(tail_nodes_.at(rule.owner));
        for (std::uint64_t t = 0; t < tail_start_.at(rule.owner); ++t) {
          auto v = VertexId::strip(rule.owner, t, rule.local);
          if (!deleted_.count(v)) out.push_back(vertex_nodes_.at(v));
        }
        break;
      }
      case NeighbourRule::Kind::EveryCopy:
      case NeighbourRule::Kind::EveryPeriodicCopy: {
        auto h = rule.kind == NeighbourRule::Kind::EveryCopy
                     ? FamilyHandle::core_fan(rule.owner)
                     : FamilyHandle::periodic(rule.owner, rule.period);
        if (h.kind == FamilyHandle::Kind::PeriodicFan && h.period >= tail_start_.at(h.owner)) {
          out.push_back(tail_nodes_.at(h.owner));
          break;
        }
        out.push_back(family_nodes_.at(h));
        if (auto it = hit_copies_.find(h); it != hit_copies_.end()) {
          for (auto k : it->second) {
            auto v = h.member(k, rule.local);
            if (!deleted_.count(v)) out.push_back(vertex_nodes_.at(v));
          }
        }
        break;
      }
    }
    return out;
  };

  DisjointSets dsu(nodes_.size());
  for (const auto& [v, node] : vertex_nodes_) {
    const auto n = graph_.neighbours(v);
    for (const auto& w : n.finite) {
      if (!deleted_.count(w)) dsu.unite(node, node_of(w));
    }
    for (const auto& rule : n.rules) {
      for (auto other : rule_nodes(rule)) dsu.unite(node, other);
    }
  }

  // group nodes by class, in node order
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < nodes_.size(); ++i) classes[dsu.find(i)].push_back(i);

  std::map<std::size_t, VertexSet> class_neighbourhood;
  for (const auto& x : deleted_) {
    const auto n = graph_.neighbours(x);
    for (const auto& w : n.finite) {
      if (!deleted_.count(w)) class_neighbourhood[dsu.find(node_of(w))].insert(x);
    }
    for (const auto& rule : n.rules) {
      for (auto node : rule_nodes(rule)) class_neighbourhood[dsu.find(node)].insert(x);
    }
  }

  std::vector<std::pair<ComponentDescriptor, std::size_t>> built;  // descriptor, class root
  for (const auto& [root, members] : classes) {
    ComponentDescriptor d;
    d.neighbourhood = class_neighbourhood[root];
    if (members.size() == 1 && nodes_[members[0]].kind == Node::Kind::Family) {
      const auto& h = nodes_[members[0]].family;
      d.kind = ComponentKind::Family;
      d.family = h;
      if (auto it = hit_copies_.find(h); it != hit_copies_.end()) d.excluded = it->second;
      built.emplace_back(std::move(d), root);
      continue;
    }
    d.kind = ComponentKind::Finite;
    std::set<std::string> tail_strips;
    for (auto m : members) {
      const auto& node = nodes_[m];
      switch (node.kind) {
        case Node::Kind::Vertex:
          d.vertices.push_back(node.vertex);
          break;
        case Node::Kind::Tail:
          d.kind = ComponentKind::Big;
          tail_strips.insert(node.strip);
          break;
        case Node::Kind::Family: {
          d.kind = ComponentKind::Big;
          AbsorbedFamily a{node.family, {}};
          if (auto it = hit_copies_.find(node.family); it != hit_copies_.end()) a.excluded = it->second;
          d.absorbed.push_back(std::move(a));
          break;
        }
      }
    }
    std::sort(d.vertices.begin(), d.vertices.end());
    std::sort(d.absorbed.begin(), d.absorbed.end());

    // Normal form: each tail starts at its minimal surviving period.
    for (const auto& strip_id : tail_strips) {
      const auto& s = *graph_.find_strip(strip_id);
      std::uint64_t from = tail_start_.at(strip_id);
      while (from > 0) {
        const auto p = from - 1;
        bool whole_period = std::all_of(s.period.vertices.begin(), s.period.vertices.end(), [&](const std::string& l) {
          auto it = vertex_nodes_.find(VertexId::strip(strip_id, p, l));
          return it != vertex_nodes_.end() && dsu.find(it->second) == root;
        });
        if (whole_period && s.periodic_fan) {
          auto h = FamilyHandle::periodic(strip_id, p);
          whole_period = dsu.find(family_nodes_.at(h)) == root && !hit_copies_.count(h);
        }
        if (!whole_period) break;
        std::erase_if(d.vertices, [&](const VertexId& v) { return v.kind == VertexKind::Strip && v.owner == strip_id && v.period == p; });
        std::erase_if(d.absorbed, [&](const AbsorbedFamily& a) {
          return a.family == FamilyHandle::periodic(strip_id, p);
        });
        from = p;
      }
      d.tails.push_back({strip_id, from});
    }
    built.emplace_back(std::move(d), root);
  }

  std::sort(built.begin(), built.end(), [](const auto& a, const auto& b) {
    return a.first.canonical() < b.first.canonical();
  });
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t i = 0; i < built.size(); ++i) {
    index_of_root[built[i].second] = i;
    components_.push_back(std::move(built[i].first));
  }
  node_component_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) node_component_[i] = index_of_root.at(dsu.find(i));

  std::set<VertexSet> crit;
  for (const auto& d : components_) {
    if (d.is_family()) crit.insert(d.neighbourhood);
  }
  critical_.assign(crit.begin(), crit.end());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& d = components_[i];
    if (!d.is_family() && !crit.count(d.neighbourhood)) minus_.push_back(i);
  }
}

std::vector<std::size_t> ComponentSystem::family(const VertexSet& y) const {
  if (!is_subset(y, deleted_)) {
    throw Error(ErrorKind::NotASubset, to_token(y) + " is not a subset of " + to_token(deleted_));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].neighbourhood == y) out.push_back(i);
  }
  return out;
}

bool ComponentSystem::is_critical_here(const VertexSet& y) const {
  return std::binary_search(critical_.begin(), critical_.end(), y);
}

ComponentRef ComponentSystem::locate(const VertexId& v) const {
  graph_.require(v);
  if (deleted_.count(v)) throw Error(ErrorKind::UnknownVertex, v.token() + " is deleted");
  const auto index = node_component_[node_of(v)];
  ComponentRef ref{index, std::nullopt};
  if (components_[index].is_family()) ref.copy = v.copy;
  return ref;
}

bool ComponentSystem::contains(const ComponentRef& ref, const VertexId& v) const {
  if (!graph_.contains(v) || deleted_.count(v)) return false;
  return locate(v) == ref;
}

void ComponentSystem::require(const ComponentRef& ref) const {
  const auto& d = at(ref.index);
  if (d.is_family() != ref.copy.has_value() || (ref.copy && d.excluded.count(*ref.copy))) {
    throw Error(ErrorKind::UnknownComponent, "bad component reference into " + d.canonical());
  }
}

VertexId ComponentSystem::representative(const ComponentRef& ref) const {
  require(ref);
  const auto& d = components_[ref.index];
  switch (d.kind) {
    case ComponentKind::Finite:
      return d.vertices.front();
    case ComponentKind::Family:
      return d.family.member(*ref.copy, shape_of(graph_, d.family).front());
    case ComponentKind::Big:
      break;
  }
  if (!d.vertices.empty()) return d.vertices.front();
  if (!d.tails.empty()) {
    const auto& t = d.tails.front();
    return VertexId::strip(t.strip, t.from_period, graph_.find_strip(t.strip)->period.vertices.front());
  }
  const auto& a = d.absorbed.front();
  std::uint64_t k = 0;
  while (a.excluded.count(k)) ++k;
  return a.family.member(k, shape_of(graph_, a.family).front());
}

std::vector<VertexId> ComponentSystem::materialize(const ComponentRef& ref, TruncationBounds bounds) const {
  require(ref);
  const auto& d = components_[ref.index];
  std::vector<VertexId> out;
  auto add_copy = [&](const FamilyHandle& h, std::uint64_t k) {
    for (const auto& l : shape_of(graph_, h)) {
      auto v = h.member(k, l);
      if (within(v, bounds)) out.push_back(std::move(v));
    }
  };
  if (d.is_family()) {
    add_copy(d.family, *ref.copy);
  } else {
    for (const auto& v : d.vertices) {
      if (within(v, bounds)) out.push_back(v);
    }
    for (const auto& t : d.tails) {
      const auto& s = *graph_.find_strip(t.strip);
      for (std::uint64_t p = t.from_period; p < bounds.periods; ++p) {
        for (const auto& l : s.period.vertices) out.push_back(VertexId::strip(s.id, p, l));
        if (!s.periodic_fan) continue;
        for (std::uint64_t k = 0; k < bounds.copies; ++k) add_copy(FamilyHandle::periodic(s.id, p), k);
      }
    }
    for (const auto& a : d.absorbed) {
      for (std::uint64_t k = 0; k < bounds.copies; ++k) {
        if (!a.excluded.count(k)) add_copy(a.family, k);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> ComponentSystem::family_index(const FamilyHandle& handle) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_family() && components_[i].family == handle) return i;
  }
  return std::nullopt;
}

SystemPtr remove_vertices(const PatternGraph& g, const VertexSet& x) {
  return std::make_shared<const ComponentSystem>(g, x);
}

namespace {

void require_nested(const ComponentSystem& finer, const ComponentSystem& coarser) {
  if (!is_subset(coarser.deleted(), finer.deleted())) {
    throw Error(ErrorKind::NotNested,
                to_token(coarser.deleted()) + " is not a subset of " + to_token(finer.deleted()));
  }
}

}  // namespace

ComponentRef bond(const ComponentSystem& finer, const ComponentRef& component, const ComponentSystem& coarser) {
  require_nested(finer, coarser);
  return coarser.locate(finer.representative(component));
}

FamilyImage bond_family(const ComponentSystem& finer, std::size_t family_index, const ComponentSystem& coarser) {
  require_nested(finer, coarser);
  const auto& d = finer.at(family_index);
  if (!d.is_family()) throw Error(ErrorKind::UnknownComponent, d.canonical() + " is not a family");
  FamilyImage image;
  if (auto target = coarser.family_index(d.family)) {
    image.identity = true;
    image.target_family = *target;
    return image;
  }
  std::uint64_t k = 0;
  while (d.excluded.count(k)) ++k;
  image.constant = coarser.locate(finer.representative({family_index, k}));
  return image;
}

bool is_critical(const PatternGraph& g, const VertexSet& y) {
  return remove_vertices(g, y)->is_critical_here(y);
}

ComponentRef unique_component_meeting(const ComponentSystem& cs, const VertexSet& y) {
  if (is_subset(y, cs.deleted())) {
    throw Error(ErrorKind::YContainedInX, to_token(y) + " is contained in " + to_token(cs.deleted()));
  }
  if (!is_critical(cs.graph(), y)) throw Error(ErrorKind::NotCritical, to_token(y));
  std::optional<ComponentRef> found;
  for (const auto& v : y) {
    if (cs.deleted().count(v)) continue;
    auto ref = cs.locate(v);
    if (found && *found != ref) {
      throw Error(ErrorKind::InvariantFailure, "critical set " + to_token(y) + " meets two components");
    }
    found = ref;
  }
  return *found;
}

std::vector<VertexSet> declared_critical_sets(const PatternGraph& g, std::size_t max_size,
                                              std::uint64_t periods) {
  std::set<VertexSet> out;
  for (const auto& f : g.spec().fans) {
    auto a = g.fan_attachment(f);
    if (a.size() <= max_size) out.insert(std::move(a));
  }
  for (const auto& s : g.spec().strips) {
    if (!s.periodic_fan || s.periodic_fan->attachment_set.size() > max_size) continue;
    for (std::uint64_t t = 0; t < periods; ++t) out.insert(g.periodic_attachment(s, t));
  }
  return {out.begin(), out.end()};
}

}  // namespace omegagraph
