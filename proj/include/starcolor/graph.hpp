#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starcolor {

using Vertex = int;
using EdgeId = int;
using Color = int;

/// Rejected graph or coloring input. The message names the offending item.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

struct EdgePair {
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const EdgePair&) const = default;
};

/// Simple undirected graph with dense vertex and edge indices.
///
/// Edge i is the i-th pair handed to add_edge / from_edge_list. Adjacency
/// lists keep insertion order, so identical input gives identical indexing.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    static Graph from_edge_list(int vertex_count, std::span<const EdgePair> pairs);

    Vertex add_vertex();
    /// Throws InvalidInput on loops, parallel edges and out-of-range endpoints.
    EdgeId add_edge(Vertex u, Vertex v);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const EdgePair& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    const std::vector<Incidence>& incident(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
    bool adjacent_edges(EdgeId a, EdgeId b) const;
    bool is_connected() const;

    bool operator==(const Graph& other) const;

private:
    std::vector<EdgePair> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

Graph graph_from_edge_list(int vertex_count, std::span<const EdgePair> pairs);

int max_degree(const Graph& g);

/// True iff every vertex has degree `delta` or 1. Throws InvalidInput on a
/// disconnected graph.
bool is_delta_semiregular(const Graph& g, int delta);

/// Partial edge coloring over the palette {1..palette_size}.
/// An edge without a color is uncolored; color 0 is never stored.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int edge_count, int palette_size);

    int palette_size() const { return palette_; }
    int edge_count() const { return static_cast<int>(colors_.size()); }

    bool is_colored(EdgeId e) const { return colors_[static_cast<std::size_t>(e)].has_value(); }
    std::optional<Color> get(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    Color at(EdgeId e) const;

    /// Throws InvalidInput when c is outside 1..palette_size.
    void set(EdgeId e, Color c);
    void clear(EdgeId e) { colors_[static_cast<std::size_t>(e)].reset(); }

    bool is_total() const;
    int colored_count() const;
    /// Number of distinct colors actually assigned.
    int colors_used() const;

    const std::vector<std::optional<Color>>& raw() const { return colors_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<std::optional<Color>> colors_;
    int palette_ = 0;
};

/// C(v): colors on the colored edges at v.
std::set<Color> incident_colors(const Graph& g, const EdgeColoring& col, Vertex v);

/// C'(v): palette colors missing at v.
std::set<Color> missing_colors(const Graph& g, const EdgeColoring& col, Vertex v);

/// floor(3*delta/2) + 1
inline int star_palette_bound(int delta) { return (3 * delta) / 2 + 1; }

}  // namespace starcolor
