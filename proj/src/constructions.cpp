#include "starcolor/constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

#include "starcolor/verifier.hpp"

namespace starcolor {

Graph gen_cycle(int n) {
    if (n < 3) throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_semiregular_tree(int delta, int height) {
    if (delta < 2) throw InvalidInput("tree degree must be at least 2, got " + std::to_string(delta));
    if (height < 1) throw InvalidInput("tree height must be at least 1, got " + std::to_string(height));
    Graph g(1);
    std::deque<std::pair<Vertex, int>> q{{0, 0}};
    while (!q.empty()) {
        const auto [v, depth] = q.front();
        q.pop_front();
        if (depth == height) continue;
        const int kids = v == 0 ? delta : delta - 1;
        for (int i = 0; i < kids; ++i) {
            const Vertex c = g.add_vertex();
            g.add_edge(v, c);
            q.emplace_back(c, depth + 1);
        }
    }
    return g;
}

Graph gen_tight_odd(int delta) {
    if (delta < 3 || delta % 2 == 0) throw InvalidInput("tight family needs odd delta >= 3, got " + std::to_string(delta));
    const Graph t = gen_semiregular_tree(delta, 3);
    const Vertex x = 1, y = 2;

    // children lists in BFS numbering: parent of every non-root is edge.u
    std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(t.vertex_count()));
    for (const auto& e : t.edges()) kids[static_cast<std::size_t>(e.u)].push_back(e.v);

    std::vector<char> drop(static_cast<std::size_t>(t.vertex_count()), 0);
    for (Vertex r : {kids[x].back(), kids[y].back()}) {
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            drop[static_cast<std::size_t>(v)] = 1;
            for (Vertex c : kids[static_cast<std::size_t>(v)]) stack.push_back(c);
        }
    }
    std::vector<Vertex> renum(static_cast<std::size_t>(t.vertex_count()), -1);
    int n = 0;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (!drop[static_cast<std::size_t>(v)]) renum[static_cast<std::size_t>(v)] = n++;

    Graph g(n);
    for (const auto& e : t.edges())
        if (!drop[static_cast<std::size_t>(e.v)]) g.add_edge(renum[static_cast<std::size_t>(e.u)], renum[static_cast<std::size_t>(e.v)]);
    g.add_edge(renum[x], renum[y]);
    return g;
}

Graph gen_figure5() {
    // x1 x2 x3 = 0 1 2, y1 y2 y3 = 3 4 5, z1..z12 = 6..17, leaves after
    Graph g(18);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 2);
    auto leaves = [&](Vertex v, int count) {
        for (int i = 0; i < count; ++i) g.add_edge(v, g.add_vertex());
    };
    leaves(0, 4);
    leaves(1, 4);
    leaves(2, 2);
    for (int i = 0; i < 12; ++i) g.add_edge(3 + i / 4, 6 + i);
    for (Vertex z = 6; z < 18; ++z) leaves(z, 5);
    return g;
}

namespace {

/// Uniform in [0, n) by rejection, so the stream does not depend on the
/// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    return r % n;
}

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Graph gen_random_cactus(const RandomCactusParams& p) {
    if (p.n_blocks < 1) throw InvalidInput("n_blocks must be positive");
    if (p.cycle_prob < 0 || p.cycle_prob > 1) throw InvalidInput("cycle_prob must lie in [0, 1]");
    if (p.cycle_len_min < 3 || p.cycle_len_max < p.cycle_len_min) throw InvalidInput("bad cycle length range");
    if (p.delta_cap < 1) throw InvalidInput("delta_cap must be positive");
    if (p.max_edges < 0) throw InvalidInput("max_edges must be non-negative");

    std::mt19937_64 rng(p.seed);
    Graph g(1);
    auto hosts = [&](int need) {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) + need <= p.delta_cap) out.push_back(v);
        return out;
    };
    for (int b = 0; b < p.n_blocks; ++b) {
        bool cycle = coin(rng, p.cycle_prob);
        int len = 1;
        if (cycle) len = p.cycle_len_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p.cycle_len_max - p.cycle_len_min + 1)));
        if (cycle && p.max_edges && g.edge_count() + len > p.max_edges) cycle = false;
        auto cand = hosts(cycle ? 2 : 1);
        if (cycle && cand.empty()) {
            cycle = false;
            cand = hosts(1);
        }
        if (!cycle) len = 1;
        if (cand.empty() || (p.max_edges && g.edge_count() + len > p.max_edges)) break;
        const Vertex at = cand[static_cast<std::size_t>(uniform_below(rng, cand.size()))];
        if (!cycle) {
            g.add_edge(at, g.add_vertex());
            continue;
        }
        Vertex prev = at;
        for (int i = 1; i < len; ++i) {
            const Vertex v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, at);
    }
    return g;
}

std::optional<AuditCounterexample> audit_coloring(const Graph& tree, const EdgeColoring& col, int delta) {
    if (col.edge_count() != tree.edge_count() || !col.is_total())
        throw InvalidInput("audit needs a total coloring of the tree");
    const ColoringReport rep = verify_star_coloring(tree, col);
    if (!rep.valid) throw InvalidInput("audit input is not a star coloring");

    const Vertex v = 0;
    const int palette = 3 * delta / 2;
    const auto cv = incident_colors(tree, col, v);
    std::vector<Vertex> nbrs;
    for (const auto& i : tree.incident(v)) nbrs.push_back(i.neighbor);

    auto fail = [&](char fact, Vertex x, Vertex y, Color c) {
        return AuditCounterexample{fact, x, y, c, col};
    };

    // (b) is a property of v alone
    for (Color c : cv) {
        int n = 0;
        for (EdgeId e = 0; e < tree.edge_count(); ++e)
            if (tree.edge(e).u != v && tree.edge(e).v != v && col.at(e) == c) ++n;
        if (n != (delta - 1) / 2) return fail('b', -1, -1, c);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vertex x = nbrs[i];
        const auto cx = incident_colors(tree, col, x);
        for (Color c = 1; c <= palette; ++c)
            if (!cv.count(c) && !cx.count(c)) return fail('a', x, -1, c);
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            const Vertex y = nbrs[j];
            const auto cy = incident_colors(tree, col, y);
            int common = 0;
            for (Color c : cx) common += static_cast<int>(cy.count(c));
            if (common < (delta + 1) / 2) return fail('a', x, y, 0);
            const Color vx = col.at(*tree.find_edge(v, x));
            const Color vy = col.at(*tree.find_edge(v, y));
            if (!cy.count(vx) && !cx.count(vy)) return fail('c', x, y, 0);
        }
    }
    return std::nullopt;
}

AuditReport audit_lemma_facts(int delta, const Budget& budget) {
    if (delta < 3 || delta % 2 == 0) throw InvalidInput("audit needs odd delta >= 3, got " + std::to_string(delta));
    AuditReport rep;
    rep.delta = delta;
    rep.palette = 3 * delta / 2;
    const Graph tree = gen_semiregular_tree(delta, 2);
    const auto res = enumerate_star_colorings(
        tree, rep.palette,
        [&](const EdgeColoring& col) {
            if (auto bad = audit_coloring(tree, col, delta)) {
                ++rep.counterexample_count;
                if (rep.counterexamples.size() < 8) rep.counterexamples.push_back(std::move(*bad));
            }
            return true;
        },
        budget);
    rep.colorings = res.count;
    rep.complete = res.complete;
    return rep;
}

}  // namespace starcolor
