#include "starcolor/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace starcolor {

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput("malformed " + what + " JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

namespace {

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
    return j.get<int>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Graph graph_from_json(const json& j) {
    const int n = as_int(field(j, "vertices"), "vertices");
    if (n < 0) throw InvalidInput("vertices must be non-negative");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw InvalidInput("edges must be an array");
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2) throw InvalidInput("edge " + std::to_string(i) + " must be a pair");
        g.add_edge(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    return g;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const json& j) {
    const int k = as_int(field(j, "palette"), "palette");
    if (k < 0) throw InvalidInput("palette must be non-negative");
    const json& colors = field(j, "colors");
    if (!colors.is_array()) throw InvalidInput("colors must be an array");
    EdgeColoring col(static_cast<int>(colors.size()), k);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i].is_null()) continue;
        const int c = as_int(colors[i], "color");
        if (c == -1) continue;
        col.set(static_cast<EdgeId>(i), c);
    }
    return col;
}

json coloring_to_json(const EdgeColoring& col) {
    json colors = json::array();
    for (const auto& c : col.raw()) colors.push_back(c ? *c : -1);
    return {{"palette", col.palette_size()}, {"colors", colors}};
}

json violation_to_json(const Violation& v) {
    return {{"kind", v.kind == Violation::Kind::ImproperPair ? "improper_pair" : "bicolored_segment"},
            {"edges", v.edges},
            {"colors", v.colors}};
}

json report_to_json(const ColoringReport& r) {
    json j = {{"valid", r.valid},
              {"colors_used", r.colors_used},
              {"palette", r.palette},
              {"max_degree", r.max_degree},
              {"bound", r.bound}};
    j["violation"] = r.violation ? violation_to_json(*r.violation) : json(nullptr);
    return j;
}

json decomposition_to_json(const BlockDecomposition& bd) {
    json blocks = json::array();
    for (const auto& b : bd.blocks) {
        const char* kind = b.kind == Block::Kind::Edge ? "edge" : b.kind == Block::Kind::Cycle ? "cycle" : "other";
        blocks.push_back({{"kind", kind}, {"vertices", b.vertices}, {"edges", b.edges}});
    }
    return {{"blocks", blocks}, {"cut_vertices", bd.cut_vertices}, {"sigma", bd.sigma}};
}

json exact_to_json(const ExactResult& r, int k) {
    json j = {{"k", k}, {"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
    j["witness"] = r.witness ? coloring_to_json(*r.witness) : json(nullptr);
    return j;
}

json audit_to_json(const AuditReport& r) {
    json ces = json::array();
    for (const auto& c : r.counterexamples) {
        json cj = {{"fact", std::string(1, c.fact)}, {"x", c.x}, {"y", c.y}, {"color", c.color}};
        cj["coloring"] = coloring_to_json(c.coloring);
        ces.push_back(cj);
    }
    return {{"delta", r.delta},
            {"palette", r.palette},
            {"colorings", r.colorings},
            {"complete", r.complete},
            {"counterexample_count", r.counterexample_count},
            {"counterexamples", ces}};
}

std::string to_dot(const Graph& g, const EdgeColoring* col) {
    static constexpr std::array<const char*, 16> kPalette = {
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
        "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075"};
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (col && col->is_colored(e)) {
            const Color c = col->at(e);
            out << " [label=\"" << c << "\", color=\"" << kPalette[static_cast<std::size_t>(c - 1) % kPalette.size()]
                << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace starcolor
