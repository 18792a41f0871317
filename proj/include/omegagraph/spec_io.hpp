#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "omegagraph/pattern_graph.hpp"

namespace omegagraph {

/// Graph spec file schema (JSON):
///
///   {
///     "core":  {"vertices": ["a", ...], "edges": [["a", "b"], ...]},
///     "strips": [{
///       "id": "s1",
///       "period": {"vertices": ["p"], "edges": []},
///       "inter_period_edges": [["p", "p"]],
///       "core_attachments": [{"core": "a", "period": 0, "local": "p"}],
///       "periodic_fan": {"template": {...}, "attachment_set": ["p"],
///                        "attachment_edges": [["l", "p"]]}        // optional
///     }],
///     "fans": [{"id": "f1", "template": {"vertices": ["u"], "edges": []},
///               "attachment_set": ["a"], "attachment_edges": [["u", "a"]]}],
///     "dominations": [{"core": "d", "strip": "s1", "local": "p"}],
///     "edges": [["core:a", "strip:s1/0/p"]]                       // optional
///   }
///
/// Every key except "core" may be omitted. Throws Error(MalformedSpec).
GraphSpec parse_graph_spec(const nlohmann::json& doc);
nlohmann::json to_json(const GraphSpec& spec);

/// Reads and parses a spec file; JSON syntax errors are reported as
/// Error(ParseError) with line and column.
GraphSpec read_graph_spec(const std::filesystem::path& path);
GraphSpec parse_graph_spec_text(const std::string& text);

/// read + validate.
PatternGraph load_graph(const std::filesystem::path& path);

}  // namespace omegagraph
