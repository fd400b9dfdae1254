#include "starcolor/ucc_colorer.hpp"

#include <algorithm>
#include <set>

#include "starcolor/verifier.hpp"

namespace starcolor {

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

std::vector<Color> color_cycle_star(int n) {
    if (n == 1) return {1};
    if (n < 3) throw InvalidInput("no block has " + std::to_string(n) + " edges");
    std::vector<Color> out;
    const int tail = n % 3 == 0 ? 0 : (n % 3 == 1 ? 4 : 5);
    for (int i = 0; i < n - tail; ++i) out.push_back(i % 3 + 1);
    if (tail == 4) out.insert(out.end(), {1, 2, 3, 4});
    if (tail == 5) out.insert(out.end(), {1, 2, 4, 3, 4});

    EdgeColoring check(n, 4);
    for (int i = 0; i < n; ++i) check.set(i, out[static_cast<std::size_t>(i)]);
    if (!StarChecker(cycle_graph(n)).is_star(check))
        throw std::logic_error("cycle pattern for n=" + std::to_string(n) + " is not a star coloring");
    return out;
}

std::vector<int> parity_siblings(int i, int count) {
    std::vector<int> out;
    for (int j = 1; j <= count; ++j) {
        if (j == i) continue;
        const bool j_odd = j % 2 == 1;
        if (i % 2 == 0 ? ((j < i && j_odd) || (j > i && !j_odd)) : ((j < i && !j_odd) || (j > i && j_odd)))
            out.push_back(j);
    }
    return out;
}

std::vector<EdgeId> e2_order(const UccSurrogate& s, Vertex x) {
    std::vector<EdgeId> out;
    for (const auto& p : s.cycle_pairs) {
        if (p.at != x) continue;
        out.push_back(p.first);
        out.push_back(p.second);
    }
    // pairs are recorded per cycle block; order them by their first edge
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (std::size_t i = 0; i < out.size(); i += 2) pairs.emplace_back(out[i], out[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    out.clear();
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    const auto it = s.classes.e2.find(x);
    if (it == s.classes.e2.end()) return out;
    for (EdgeId e : it->second)
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
}

EdgeColoring color_ucc(const UccSurrogate& s, int delta) {
    EdgeColoring start(s.graph.edge_count(), star_palette_bound(delta));
    const auto pattern = color_cycle_star(static_cast<int>(s.block.edges.size()));
    for (std::size_t i = 0; i < pattern.size(); ++i) start.set(s.block.edges[i], pattern[i]);
    return extend_ucc_partial(s, start, delta);
}

EdgeColoring extend_ucc_partial(const UccSurrogate& s, const EdgeColoring& partial, int delta) {
    const Graph& g = s.graph;
    const int k = star_palette_bound(delta);
    if (s.block.kind == Block::Kind::Cycle && delta < 3)
        throw InvalidInput("delta " + std::to_string(delta) + " is too small for a cycle block");
    if (partial.edge_count() != g.edge_count()) throw InvalidInput("partial coloring size mismatch");

    EdgeColoring col(g.edge_count(), k);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto c = partial.get(e)) col.set(e, *c);
    StarChecker checker(g);
    if (!checker.is_star(col)) throw InvalidInput("partial coloring is not a star coloring");

    std::set<Color> block_colors;
    for (EdgeId e : s.block.edges) {
        if (!col.is_colored(e)) throw InvalidInput("block edge " + std::to_string(e) + " is uncolored");
        block_colors.insert(col.at(e));
    }
    std::vector<Color> free_of_block;  // C' in ascending order; its prefix is S
    for (Color c = 1; c <= k; ++c)
        if (!block_colors.count(c)) free_of_block.push_back(c);

    for (Vertex x : s.block.vertices) {
        const auto order = e2_order(s, x);
        const int m = static_cast<int>(order.size());

        auto at_x = incident_colors(g, col, x);
        std::size_t next = 0;
        for (EdgeId e : order) {
            if (col.is_colored(e)) continue;
            while (next < free_of_block.size() && at_x.count(free_of_block[next])) ++next;
            if (next == free_of_block.size())
                throw std::logic_error("not enough colors for E2 at vertex " + std::to_string(x));
            col.set(e, free_of_block[next]);
            at_x.insert(free_of_block[next]);
        }

        std::vector<Color> fresh;
        for (Color c = 1; c <= k; ++c)
            if (!at_x.count(c)) fresh.push_back(c);

        for (int i = 1; i <= m; ++i) {
            const EdgeId ei = order[static_cast<std::size_t>(i - 1)];
            const Vertex y = g.edge(ei).other(x);
            const auto e3 = s.classes.e3.find(ei);
            if (e3 == s.classes.e3.end()) continue;

            std::vector<Color> candidates = fresh;
            std::vector<Color> siblings;
            for (int j : parity_siblings(i, m)) siblings.push_back(col.at(order[static_cast<std::size_t>(j - 1)]));
            // the pair partner (i-1 for even i) goes first
            const Color partner = i % 2 == 0 ? col.at(order[static_cast<std::size_t>(i - 2)]) : 0;
            std::sort(siblings.begin(), siblings.end(), [&](Color a, Color b) {
                return std::pair(a != partner, a) < std::pair(b != partner, b);
            });
            candidates.insert(candidates.end(), siblings.begin(), siblings.end());

            auto at_y = incident_colors(g, col, y);
            std::size_t pos = 0;
            for (EdgeId f : e3->second) {
                if (col.is_colored(f)) continue;
                while (pos < candidates.size() && at_y.count(candidates[pos])) ++pos;
                if (pos == candidates.size())
                    throw std::logic_error("parity rule ran out of colors at edge " + std::to_string(ei));
                col.set(f, candidates[pos]);
                at_y.insert(candidates[pos]);
            }
        }
    }

    if (auto v = checker.first_violation(col))
        throw std::logic_error("UCC coloring failed verification on edges " + std::to_string(v->edges.front()) +
                               ".." + std::to_string(v->edges.back()));
    return col;
}

}  // namespace starcolor
