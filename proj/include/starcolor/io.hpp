#pragma once

#include <string>

#include <json.hpp>

#include "starcolor/cactus.hpp"
#include "starcolor/constructions.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/verifier.hpp"

namespace starcolor {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InvalidInput naming the byte offset.
json parse_json(const std::string& text, const std::string& what);

/// {"vertices": N, "edges": [[u, v], ...]}
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// {"palette": k, "colors": [c, ...]} with -1 or null for an uncolored edge.
EdgeColoring coloring_from_json(const json& j);
json coloring_to_json(const EdgeColoring& col);

json violation_to_json(const Violation& v);
json report_to_json(const ColoringReport& r);
json decomposition_to_json(const BlockDecomposition& bd);
json exact_to_json(const ExactResult& r, int k);
json audit_to_json(const AuditReport& r);

/// Graphviz with colors mapped onto a fixed 16-entry palette and numeric labels.
std::string to_dot(const Graph& g, const EdgeColoring* col = nullptr);

std::string read_file(const std::string& path);

}  // namespace starcolor
