#pragma once

// Test-only oracles and generators. Nothing here calls into the verifier or
// the solvers it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Graph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int edges) {
    Graph g(edges + 1);
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph spider_graph(const std::vector<int>& legs) {
    Graph g(1);
    for (int len : legs) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            const Vertex v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

/// Cycle of length a through 0 plus a second block at 0: a cycle of length
/// b >= 3, or a pendant edge when b == 1.
inline Graph two_block_cactus(int a, int b) {
    Graph g = cycle_graph(a);
    if (b == 1) {
        g.add_edge(0, g.add_vertex());
        return g;
    }
    Vertex prev = 0;
    for (int i = 1; i < b; ++i) {
        const Vertex v = g.add_vertex();
        g.add_edge(prev, v);
        prev = v;
    }
    g.add_edge(prev, 0);
    return g;
}

/// Naive star check: walk every sequence of 4 distinct edges where each
/// consecutive pair shares the walk vertex, keeping only simple paths and
/// closed 4-cycles. Also checks properness.
inline bool naive_is_star(const Graph& g, const std::vector<int>& colors) {
    auto c = [&](EdgeId e) { return colors[static_cast<std::size_t>(e)]; };
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (const auto& a : g.incident(v))
            for (const auto& b : g.incident(v))
                if (a.edge != b.edge && c(a.edge) > 0 && c(a.edge) == c(b.edge)) return false;

    std::vector<Vertex> vs;
    std::vector<EdgeId> es;
    bool ok = true;
    auto rec = [&](auto&& self) -> void {
        if (!ok) return;
        if (es.size() == 4) {
            const int c0 = c(es[0]), c1 = c(es[1]), c2 = c(es[2]), c3 = c(es[3]);
            if (c0 > 0 && c1 > 0 && c0 == c2 && c1 == c3) ok = false;
            return;
        }
        for (const auto& inc : g.incident(vs.back())) {
            if (std::find(es.begin(), es.end(), inc.edge) != es.end()) continue;
            const bool closes = es.size() == 3 && inc.neighbor == vs.front();
            if (!closes && std::find(vs.begin(), vs.end(), inc.neighbor) != vs.end()) continue;
            vs.push_back(inc.neighbor);
            es.push_back(inc.edge);
            self(self);
            vs.pop_back();
            es.pop_back();
        }
    };
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
        vs = {v};
        es.clear();
        rec(rec);
    }
    return ok;
}

/// Colors as a plain vector, 0 for uncolored.
inline std::vector<int> raw_colors(const EdgeColoring& col) {
    std::vector<int> out;
    for (const auto& c : col.raw()) out.push_back(c.value_or(0));
    return out;
}

/// Connected simple graph on `n` vertices: a random spanning tree plus
/// random extra edges, `m` edges in total (m >= n-1).
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int m) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    int guard = 0;
    while (g.edge_count() < m && guard++ < 1000) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u != v && !g.find_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

/// Random coloring over 1..k; each edge left uncolored with probability `hole`.
inline EdgeColoring random_coloring(std::mt19937_64& rng, const Graph& g, int k, double hole) {
    EdgeColoring col(g.edge_count(), k);
    std::uniform_real_distribution<double> u(0, 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (u(rng) >= hole) col.set(e, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
    return col;
}

/// Delta-semiregular unicyclic graph: cycle of length n (or a single edge
/// when n == 1), every block vertex padded to delta with children, every
/// child given delta-1 leaves.
inline Graph semiregular_ucc(int delta, int n) {
    Graph g = n == 1 ? path_graph(1) : cycle_graph(n);
    const int block_vertices = g.vertex_count();
    for (Vertex x = 0; x < block_vertices; ++x) {
        while (g.degree(x) < delta) {
            const Vertex y = g.add_vertex();
            g.add_edge(x, y);
            for (int i = 0; i < delta - 1; ++i) g.add_edge(y, g.add_vertex());
        }
    }
    return g;
}

}  // namespace starcolor::testing
