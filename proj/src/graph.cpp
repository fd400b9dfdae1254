#include "starcolor/graph.hpp"

#include <algorithm>
#include <queue>

namespace starcolor {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InvalidInput("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edge_list(int vertex_count, std::span<const EdgePair> pairs) {
    Graph g(vertex_count);
    for (const auto& p : pairs) g.add_edge(p.u, p.v);
    return g;
}

Vertex Graph::add_vertex() {
    adjacency_.emplace_back();
    return vertex_count() - 1;
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InvalidInput("edge " + pair_text(u, v) + ": endpoint out of range");
    if (u == v) throw InvalidInput("edge " + pair_text(u, v) + ": self-loop");
    if (find_edge(u, v)) throw InvalidInput("edge " + pair_text(u, v) + ": duplicate edge");
    const EdgeId e = edge_count();
    edges_.push_back({u, v});
    adjacency_[static_cast<std::size_t>(u)].push_back({v, e});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, e});
    return e;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    const Vertex a = degree(u) <= degree(v) ? u : v;
    const Vertex b = a == u ? v : u;
    for (const auto& inc : incident(a))
        if (inc.neighbor == b) return inc.edge;
    return std::nullopt;
}

bool Graph::adjacent_edges(EdgeId a, EdgeId b) const {
    if (a == b) return false;
    const auto& x = edge(a);
    const auto& y = edge(b);
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

bool Graph::is_connected() const {
    if (vertex_count() <= 1) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (const auto& inc : incident(v)) {
            if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                seen[static_cast<std::size_t>(inc.neighbor)] = 1;
                ++reached;
                q.push(inc.neighbor);
            }
        }
    }
    return reached == vertex_count();
}

bool Graph::operator==(const Graph& other) const {
    return vertex_count() == other.vertex_count() && edges_ == other.edges_;
}

Graph graph_from_edge_list(int vertex_count, std::span<const EdgePair> pairs) {
    return Graph::from_edge_list(vertex_count, pairs);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_delta_semiregular(const Graph& g, int delta) {
    if (!g.is_connected()) throw InvalidInput("graph is not connected");
    if (g.vertex_count() <= 1) return true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 1 && d != delta) return false;
    }
    return true;
}

EdgeColoring::EdgeColoring(int edge_count, int palette_size)
    : colors_(static_cast<std::size_t>(edge_count)), palette_(palette_size) {
    if (edge_count < 0 || palette_size < 0) throw InvalidInput("negative coloring size");
}

Color EdgeColoring::at(EdgeId e) const {
    const auto c = get(e);
    if (!c) throw std::logic_error("edge " + std::to_string(e) + " is uncolored");
    return *c;
}

void EdgeColoring::set(EdgeId e, Color c) {
    if (c < 1 || c > palette_)
        throw InvalidInput("color " + std::to_string(c) + " on edge " + std::to_string(e) +
                           " outside palette 1.." + std::to_string(palette_));
    colors_[static_cast<std::size_t>(e)] = c;
}

bool EdgeColoring::is_total() const {
    return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

int EdgeColoring::colored_count() const {
    return static_cast<int>(
        std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

int EdgeColoring::colors_used() const {
    std::set<Color> seen;
    for (const auto& c : colors_)
        if (c) seen.insert(*c);
    return static_cast<int>(seen.size());
}

std::set<Color> incident_colors(const Graph& g, const EdgeColoring& col, Vertex v) {
    std::set<Color> out;
    for (const auto& inc : g.incident(v))
        if (auto c = col.get(inc.edge)) out.insert(*c);
    return out;
}

std::set<Color> missing_colors(const Graph& g, const EdgeColoring& col, Vertex v) {
    const auto present = incident_colors(g, col, v);
    std::set<Color> out;
    for (Color c = 1; c <= col.palette_size(); ++c)
        if (!present.count(c)) out.insert(c);
    return out;
}

}  // namespace starcolor
