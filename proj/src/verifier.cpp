#include "starcolor/verifier.hpp"

#include <algorithm>

namespace starcolor {

namespace {

Segment canonical_path(std::array<EdgeId, 4> p) {
    std::array<EdgeId, 4> r{p[3], p[2], p[1], p[0]};
    return {std::min(p, r), false};
}

Segment canonical_cycle(const std::array<EdgeId, 4>& c) {
    std::array<EdgeId, 4> best = c;
    for (int shift = 0; shift < 4; ++shift) {
        std::array<EdgeId, 4> fwd{}, bwd{};
        for (int i = 0; i < 4; ++i) {
            fwd[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>((shift + i) % 4)];
            bwd[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>((shift - i + 4) % 4)];
        }
        best = std::min({best, fwd, bwd});
    }
    return {best, true};
}

}  // namespace

std::vector<Segment> enumerate_4edge_segments(const Graph& g) {
    // Every such segment has a unique middle vertex (paths) or is found
    // from its smallest vertex (4-cycles).
    std::vector<Segment> out;
    for (Vertex mid = 0; mid < g.vertex_count(); ++mid) {
        const auto& around = g.incident(mid);
        for (std::size_t i = 0; i < around.size(); ++i) {
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                const Vertex a = around[i].neighbor;
                const Vertex b = around[j].neighbor;
                for (const auto& ia : g.incident(a)) {
                    const Vertex a2 = ia.neighbor;
                    if (a2 == mid || a2 == b) continue;
                    for (const auto& ib : g.incident(b)) {
                        const Vertex b2 = ib.neighbor;
                        if (b2 == mid || b2 == a) continue;
                        const std::array<EdgeId, 4> seq{ia.edge, around[i].edge, around[j].edge, ib.edge};
                        if (a2 == b2) {
                            if (mid < a && mid < b && mid < a2) {
                                out.push_back(canonical_cycle(seq));
                            }
                        } else {
                            out.push_back(canonical_path(seq));
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    // a 4-cycle is reached once from its minimum vertex, but guard anyway
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StarChecker::StarChecker(const Graph& g) : graph_(&g), segments_(enumerate_4edge_segments(g)) {}

std::optional<Violation> StarChecker::first_violation(const EdgeColoring& col) const {
    const Graph& g = *graph_;
    std::optional<Violation> best;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            const auto ci = col.get(inc[i].edge);
            if (!ci) continue;
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const auto cj = col.get(inc[j].edge);
                if (!cj || *ci != *cj) continue;
                const EdgeId lo = std::min(inc[i].edge, inc[j].edge);
                const EdgeId hi = std::max(inc[i].edge, inc[j].edge);
                if (!best || std::pair(lo, hi) < std::pair(best->edges[0], best->edges[1])) {
                    best = Violation{Violation::Kind::ImproperPair, {lo, hi}, {*ci, *cj}};
                }
            }
        }
    }
    if (best) return best;

    for (const auto& s : segments_) {
        std::array<Color, 4> c{};
        bool all = true;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto ci = col.get(s.edges[i]);
            if (!ci) {
                all = false;
                break;
            }
            c[i] = *ci;
        }
        if (!all) continue;
        if (c[0] == c[2] && c[1] == c[3] && c[0] != c[1]) {
            return Violation{Violation::Kind::BicoloredSegment,
                             {s.edges.begin(), s.edges.end()},
                             {c.begin(), c.end()}};
        }
    }
    return std::nullopt;
}

ColoringReport verify_star_coloring(const Graph& g, const EdgeColoring& col) {
    if (col.edge_count() != g.edge_count())
        throw InvalidInput("coloring has " + std::to_string(col.edge_count()) + " entries, graph has " +
                           std::to_string(g.edge_count()) + " edges");
    for (EdgeId e = 0; e < col.edge_count(); ++e) {
        const auto c = col.get(e);
        if (c && (*c < 1 || *c > col.palette_size()))
            throw InvalidInput("edge " + std::to_string(e) + " has color " + std::to_string(*c) +
                               " outside palette");
    }
    ColoringReport rep;
    rep.palette = col.palette_size();
    rep.colors_used = col.colors_used();
    rep.max_degree = max_degree(g);
    rep.bound = star_palette_bound(rep.max_degree);
    rep.violation = StarChecker(g).first_violation(col);
    rep.valid = !rep.violation.has_value();
    return rep;
}

bool is_star_on_edges(const Graph& g, const EdgeColoring& col, const std::vector<EdgeId>& edges) {
    EdgeColoring sub(col.edge_count(), col.palette_size());
    for (EdgeId e : edges)
        if (auto c = col.get(e)) sub.set(e, *c);
    return StarChecker(g).is_star(sub);
}

}  // namespace starcolor
