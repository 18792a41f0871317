#include "omegagraph/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "omegagraph/errors.hpp"

namespace omegagraph {

using nlohmann::json;

namespace {

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::MalformedSpec, where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorKind::MalformedSpec, "unknown key '" + key + "' in " + where);
  }
}

std::vector<LocalEdge> edges_from(const json& arr) {
  std::vector<LocalEdge> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::MalformedSpec, "edge must be a pair: " + e.dump());
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

json edges_to(const std::vector<LocalEdge>& edges) {
  json arr = json::array();
  for (const auto& [u, v] : edges) arr.push_back({u, v});
  return arr;
}

TemplateGraph template_from(const json& obj, const std::string& where) {
  check_keys(obj, {"vertices", "edges"}, where);
  TemplateGraph g;
  g.vertices = obj.value("vertices", std::vector<std::string>{});
  if (obj.contains("edges")) g.edges = edges_from(obj.at("edges"));
  return g;
}

json template_to(const TemplateGraph& g) { return {{"vertices", g.vertices}, {"edges", edges_to(g.edges)}}; }

FanSpec fan_from(const json& obj, const std::string& where) {
  check_keys(obj, {"id", "template", "attachment_set", "attachment_edges"}, where);
  FanSpec f;
  f.id = obj.value("id", std::string{});
  f.shape = template_from(obj.at("template"), where + ".template");
  f.attachment_set = obj.value("attachment_set", std::vector<std::string>{});
  if (obj.contains("attachment_edges")) f.attachment_edges = edges_from(obj.at("attachment_edges"));
  return f;
}

json fan_to(const FanSpec& f) {
  json out = {{"template", template_to(f.shape)},
              {"attachment_set", f.attachment_set},
              {"attachment_edges", edges_to(f.attachment_edges)}};
  if (!f.id.empty()) out["id"] = f.id;
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(const json& doc) {
  try {
    check_keys(doc, {"core", "strips", "fans", "dominations", "edges"}, "spec");
    GraphSpec spec;
    if (doc.contains("core")) spec.core = template_from(doc.at("core"), "core");
    for (const auto& s : doc.value("strips", json::array())) {
      check_keys(s, {"id", "period", "inter_period_edges", "core_attachments", "periodic_fan"}, "strip");
      StripSpec strip;
      strip.id = s.at("id").get<std::string>();
      strip.period = template_from(s.at("period"), "strip " + strip.id + ".period");
      if (s.contains("inter_period_edges")) strip.inter_period_edges = edges_from(s.at("inter_period_edges"));
      for (const auto& a : s.value("core_attachments", json::array())) {
        check_keys(a, {"core", "period", "local"}, "core attachment");
        strip.core_attachments.push_back(
            {a.at("core").get<std::string>(), a.at("period").get<std::uint64_t>(), a.at("local").get<std::string>()});
      }
      if (s.contains("periodic_fan") && !s.at("periodic_fan").is_null()) {
        strip.periodic_fan = fan_from(s.at("periodic_fan"), "strip " + strip.id + ".periodic_fan");
      }
      spec.strips.push_back(std::move(strip));
    }
    for (const auto& f : doc.value("fans", json::array())) spec.fans.push_back(fan_from(f, "fan"));
    for (const auto& d : doc.value("dominations", json::array())) {
      check_keys(d, {"core", "strip", "local"}, "domination");
      spec.dominations.push_back(
          {d.at("core").get<std::string>(), d.at("strip").get<std::string>(), d.value("local", std::string{})});
    }
    for (const auto& e : doc.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::MalformedSpec, "edge must be a pair: " + e.dump());
      spec.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

json to_json(const GraphSpec& spec) {
  json out;
  out["core"] = template_to(spec.core);
  json strips = json::array();
  for (const auto& s : spec.strips) {
    json strip = {{"id", s.id}, {"period", template_to(s.period)}, {"inter_period_edges", edges_to(s.inter_period_edges)}};
    json attachments = json::array();
    for (const auto& a : s.core_attachments) {
      attachments.push_back({{"core", a.core}, {"period", a.period}, {"local", a.local}});
    }
    strip["core_attachments"] = attachments;
    if (s.periodic_fan) strip["periodic_fan"] = fan_to(*s.periodic_fan);
    strips.push_back(std::move(strip));
  }
  out["strips"] = strips;
  json fans = json::array();
  for (const auto& f : spec.fans) fans.push_back(fan_to(f));
  out["fans"] = fans;
  json doms = json::array();
  for (const auto& d : spec.dominations) doms.push_back({{"core", d.core}, {"strip", d.strip}, {"local", d.local}});
  out["dominations"] = doms;
  if (!spec.edges.empty()) {
    json edges = json::array();
    for (const auto& [a, b] : spec.edges) edges.push_back({a, b});
    out["edges"] = edges;
  }
  return out;
}

GraphSpec parse_graph_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  return parse_graph_spec(doc);
}

GraphSpec read_graph_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_spec_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

PatternGraph load_graph(const std::filesystem::path& path) {
  return PatternGraph::validate(read_graph_spec(path));
}

}  // namespace omegagraph
