// omegagraph: command-line front end for pattern-graph analyses.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omegagraph/errors.hpp"
#include "omegagraph/report.hpp"
#include "omegagraph/spec_io.hpp"

using namespace omegagraph;
using nlohmann::json;

namespace {

constexpr const char* kTokenHelp = R"(
Vertex tokens:
  core:<name>                   core vertex
  strip:<strip>/<period>/<local>  vertex of a strip period
  fan:<fan>/<copy>/<local>      vertex of a core fan copy
  pfan:<strip>/<period>/<copy>/<local>  vertex of a periodic fan copy
Vertex sets are written {t1,t2}. Points are end:<strip> or crit:{t1,...}.

Exit codes: 0 success, 1 invalid input, 2 internal invariant failure.)";

struct Globals {
  bool json = false;
  ReportOptions report;
  std::string output;
};

void emit(const Globals& g, const json& doc, const std::string& text) {
  const std::string body = g.json ? doc.dump(2) + "\n" : text;
  if (g.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + g.output);
  out << body;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string sets_text(const json& sets) {
  std::vector<std::string> out;
  for (const auto& y : sets) out.push_back("{" + join(y.get<std::vector<std::string>>(), ",") + "}");
  return out.empty() ? "none" : join(out);
}

std::string classification_text(const json& c) {
  std::ostringstream out;
  out << "trichotomy: " << c["trichotomy"].get<std::string>() << "\n"
      << "tough: " << c["tough"] << "\nend-tough: " << c["end_tough"] << "\n";
  for (const auto& e : c["ends"]) {
    out << "  end " << e["strip"].get<std::string>() << ": ";
    if (e["tough"].get<bool>()) {
      out << "tough, separator " << sets_text(json::array({e["separator"]})) << "\n";
    } else {
      out << "not tough, " << e["periodic_fan"].get<std::string>() << "\n";
    }
  }
  return out.str();
}

std::string check_text(const json& check) {
  std::ostringstream out;
  out << (check["ok"].get<bool>() ? "ok" : "FAILED");
  for (const char* part : {"functoriality", "condition1", "continuity"}) {
    out << "\n  " << part << ": " << check[part]["checks"] << " checks";
    for (const auto& f : check[part]["failures"]) out << "\n    " << f.get<std::string>();
  }
  return out.str() + "\n";
}

std::string analysis_text(const json& r) {
  std::ostringstream out;
  out << classification_text(r["classification"]);
  out << "critical sets (|Y| <= " << r["critical"]["max_size"] << ", periods < " << r["critical"]["horizon"]
      << "): " << sets_text(r["critical"]["sets"]) << "\n";
  out << "gamma system on " << sets_text(r["gamma_system"]["family"]) << ": " << check_text(r["gamma_system"]["check"]);
  return out.str();
}

std::string components_text(const json& cs) {
  std::ostringstream out;
  out << "X = " << sets_text(json::array({cs["deleted"]})) << "\n";
  for (const auto& c : cs["components"]) {
    out << "  [" << c["index"] << "] " << c["canonical"].get<std::string>()
        << "  N=" << sets_text(json::array({c["neighbourhood"]}));
    if (c["kind"] == "family") out << "  (infinite family)";
    out << "\n";
  }
  out << "crit(X): " << sets_text(cs["critical"]) << "\n";
  std::vector<std::string> minus;
  for (const auto& i : cs["minus"]) minus.push_back("[" + i.dump() + "]");
  out << "C_X^-: " << (minus.empty() ? "none" : join(minus)) << "\n";
  return out.str();
}

std::vector<VertexSet> parse_family(const std::string& text) {
  std::vector<VertexSet> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) out.push_back(parse_vertex_set(part));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty family");
  return out;
}

std::size_t parse_seps(const std::string& text) {
  const std::string prefix = "auto:";
  if (text.rfind(prefix, 0) != 0) throw Error(ErrorKind::ParseError, "--seps expects auto:<k>, got " + text);
  try {
    std::size_t used = 0;
    const auto k = std::stoul(text.substr(prefix.size()), &used);
    if (used + prefix.size() != text.size()) throw std::invalid_argument(text);
    return k;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "--seps expects auto:<k>, got " + text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Analyses of infinite graphs given as omega-pattern specs."};
  app.footer(kTokenHelp);
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--json", globals.json, "Emit JSON instead of text");
  app.add_option("--seed", globals.report.seed, "Seed for sampled deletion sets")->capture_default_str();
  app.add_option("--horizon", globals.report.horizon, "Strip periods below this bound are examined")->capture_default_str();
  app.add_option("--copies", globals.report.copies, "Fan copies below this bound are examined")->capture_default_str();
  app.add_option("-o,--output", globals.output, "Write to this file instead of stdout");

  std::string spec_path;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("spec", spec_path, "Graph spec (JSON)")->required();
    return sub;
  };

  auto* analyze_cmd = add("analyze", "Classification, critical sets and the Gamma-system check");
  analyze_cmd->add_option("--max-size", globals.report.max_size, "Critical-set size bound (0: automatic)");

  auto* components_cmd = add("components", "Components of G - X");
  std::string delete_text;
  components_cmd->add_option("--delete", delete_text, "Comma-separated vertex tokens");

  auto* critical_cmd = add("critical", "Critical vertex sets within bounds");
  critical_cmd->add_option("--max-size", globals.report.max_size, "Size bound (0: automatic)");

  auto* classify_cmd = add("classify", "Tough / end-tough trichotomy");

  auto* limit_cmd = add("limit", "Limit points of an inverse system");
  std::string family_text;
  limit_cmd->add_option("--family", family_text, "Vertex sets separated by ';'")->required();

  auto* tangle_cmd = add("check-tangle", "Check the orientation a point induces");
  std::string point_text, seps_text = "auto:1";
  tangle_cmd->add_option("--point", point_text, "end:<strip> or crit:{...}")->required();
  tangle_cmd->add_option("--seps", seps_text, "auto:<k>: all sampled separations with |X| <= k")->capture_default_str();

  auto* distinguish_cmd = add("distinguish", "Smallest separation telling two points apart");
  std::string first_text, second_text;
  std::size_t distinguish_size = 6;
  distinguish_cmd->add_option("first", first_text, "First point")->required();
  distinguish_cmd->add_option("second", second_text, "Second point")->required();
  distinguish_cmd->add_option("--max-size", distinguish_size, "Largest |X| tried")->capture_default_str();

  auto* dot_cmd = add("export-dot", "Graphviz export of a truncation");
  std::uint64_t periods = 0;
  std::string gamma_text;
  dot_cmd->add_option("--periods", periods, "Strip periods (0: use --horizon)");
  dot_cmd->add_option("--gamma", gamma_text, "Draw Gamma_X for this vertex set instead");

  auto* report_cmd = add("report", "Full analysis report");
  report_cmd->add_option("--seps", seps_text, "auto:<k> for the tangle checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto g = load_graph(spec_path);
  const auto& opts = globals.report;

  if (analyze_cmd->parsed()) {
    auto r = analyze(g, opts);
    r["spec"] = to_json(g.spec());
    emit(globals, r, analysis_text(r));
  } else if (components_cmd->parsed()) {
    const auto cs = remove_vertices(g, parse_vertex_set(delete_text));
    const auto r = to_json(*cs);
    emit(globals, r, components_text(r));
  } else if (critical_cmd->parsed()) {
    const auto k = opts.max_size ? opts.max_size : default_max_size(g);
    json sets = json::array();
    for (const auto& y : enumerate_critical(g, k, opts.horizon)) sets.push_back(to_json(y));
    const json r = {{"max_size", k}, {"horizon", opts.horizon}, {"sets", sets}};
    emit(globals, r, sets_text(sets) + "\n");
  } else if (classify_cmd->parsed()) {
    const auto r = to_json(classify(g));
    emit(globals, r, classification_text(r));
  } else if (limit_cmd->parsed()) {
    SystemCache cache(g);
    json points = json::array();
    std::string text;
    for (const auto& p : limit_points(cache, parse_family(family_text), opts.horizon)) {
      points.push_back(to_json(p));
      std::vector<std::string> thread;
      for (const auto& q : p.thread) thread.push_back(q.token());
      text += p.point.token() + (p.compatible ? "" : " (INCOMPATIBLE)") + "\n  " + join(thread, " <- ") + "\n";
    }
    emit(globals, {{"horizon", opts.horizon}, {"points", points}}, text);
  } else if (tangle_cmd->parsed()) {
    const auto xi = PointOfGamma::parse(point_text);
    xi.require(g);
    SystemCache cache(g);
    auto ro = opts;
    ro.seps_size = parse_seps(seps_text);
    const auto o = induced_orientation(xi, auto_separations(cache, ro));
    auto r = to_json(check_tangle(g, o), o);
    r["point"] = xi.token();
    r["separations"] = o.size();
    std::string text = r["verdict"].get<std::string>() + " (" + std::to_string(o.size()) + " separations)\n";
    if (r.contains("witness")) {
      for (const auto& w : r["witness"]) text += "  " + w.get<std::string>() + "\n";
    }
    emit(globals, r, text);
  } else if (distinguish_cmd->parsed()) {
    const auto a = PointOfGamma::parse(first_text);
    const auto b = PointOfGamma::parse(second_text);
    const auto d = distinguish(g, a, b, {0, distinguish_size});
    const auto r = to_json(d);
    emit(globals, r, "X = " + sets_text(json::array({r["base"]})) + "\n  " + a.token() + ": " +
                         d.first.describe() + "\n  " + b.token() + ": " + d.second.describe() + "\n");
  } else if (dot_cmd->parsed()) {
    std::string dot;
    if (!gamma_text.empty()) {
      dot = to_dot(gamma_space(*remove_vertices(g, parse_vertex_set(gamma_text))));
    } else {
      dot = truncation_to_dot(truncate(g, {periods ? periods : opts.horizon, opts.copies}));
    }
    emit(globals, json{{"dot", dot}}, dot);
  } else if (report_cmd->parsed()) {
    auto ro = opts;
    ro.seps_size = parse_seps(seps_text);
    auto r = full_report(g, ro);
    r["spec"] = to_json(g.spec());
    emit(globals, r, analysis_text(r) + "(use --json for the full report)\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) {
      std::cerr << "error: " << to_string(v.kind) << " at " << v.element << ": " << v.message << "\n";
    }
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantFailure ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
